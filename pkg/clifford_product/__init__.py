from .product import cayley_table, geometric_product, product_vector, vector_product

__all__ = [
    "geometric_product",
    "cayley_table",
    "vector_product",
    "product_vector",
]
