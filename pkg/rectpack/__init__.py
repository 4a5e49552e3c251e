"""rectpack: coloring rectangle intersection graphs with O(w log w) colors and
approximating maximum weight independent sets of rectangles."""

__version__ = "0.1.0"
