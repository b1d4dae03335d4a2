"""mforge: binary-matroid workbench.

GF(2) kernels, labeled binary matroids, signed graphs and grafts,
class-membership recognizers (graphic / even-cycle / even-cut /
blocking-pair), the frame-template calculus, and a named verification
suite with a command-line front end.
"""

__version__ = "0.1.0"
