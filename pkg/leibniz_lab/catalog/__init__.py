from leibniz_lab.catalog import cocycles as _cocycles
from leibniz_lab.catalog import families as _families

CatalogEntry = _families.CatalogEntry
build = _families.build
build_from_name = _families.build_from_name
format_name = _families.format_name
get_entry = _families.get_entry
list_entries = _families.list_entries
parse_name = _families.parse_name
available_representatives = _cocycles.available_representatives
list_representatives = _cocycles.list_representatives
representative_cocycle = _cocycles.representative_cocycle
scaling_combination = _cocycles.scaling_combination

__all__ = [
    "CatalogEntry",
    "build",
    "build_from_name",
    "format_name",
    "get_entry",
    "list_entries",
    "parse_name",
    "available_representatives",
    "list_representatives",
    "representative_cocycle",
    "scaling_combination",
]
