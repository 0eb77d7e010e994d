"""Named Graph Catalog Module."""

from .graph_catalog import DEFAULT_GRAPHS, CatalogEntry, GraphCatalog

__all__ = ["DEFAULT_GRAPHS", "CatalogEntry", "GraphCatalog"]
