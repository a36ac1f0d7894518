# Matching numbers and edge-ideal dimension of finite simple graphs
__version__ = "1.0.0"
