"""RainbowForge: rainbow domination on cubic graphs and generalized Petersen graphs."""

from rainbowforge.workbench import Workbench

__all__ = ["Workbench"]
__version__ = "0.1.0"
