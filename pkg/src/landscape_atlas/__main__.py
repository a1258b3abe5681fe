from landscape_atlas.main import run

run()
