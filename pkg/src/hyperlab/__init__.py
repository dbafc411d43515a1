"""hyperlab: finite hyperfields, quotient constructions, and extension
experiments, exposed as a library, an HTTP service, and a thin CLI."""

__version__ = "0.1.0"
