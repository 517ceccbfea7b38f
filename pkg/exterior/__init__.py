from .wedge import outermorphism_matrix, wedge, wedge_all

__all__ = [
    "wedge",
    "wedge_all",
    "outermorphism_matrix",
]
