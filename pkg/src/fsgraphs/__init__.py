"""Friends-and-strangers graphs FS(X, K_{k1,...,kt}): brute-force component
analysis, structural classification and closed-form connectivity oracles."""

__version__ = "0.1.0"
