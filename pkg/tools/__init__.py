"""Resolution-aware classicality tools for coupled Kerr oscillators."""

__version__ = "0.1.0"
