# -*- coding: utf-8 -*-
"""
src.landscape_atlas.__init__.py - Landscape-Atlas
Created by NCagle
2025-02-03
      _
   __(.)<
~~~⋱___)~~~

Exhaustive inventory of invariant pseudo-Boolean rank landscapes for
small n: counting, classification under hypercube automorphisms,
topological properties and exact hill-climber performance.
"""

__version__ = "0.1.0"
