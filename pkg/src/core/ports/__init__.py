"""Core ports (interfaces) for kitecolor."""

from .coloring_engine_port import ColoringEnginePort

__all__ = ["ColoringEnginePort"]
