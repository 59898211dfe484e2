"""Shared cached builders so each diagram type is constructed once per run."""

from functools import lru_cache

from su2branch.binarygroups import build_group, character_table
from su2branch.branching import Branching
from su2branch.mckay import extended_graph


@lru_cache(maxsize=None)
def bundle(type_str: str) -> Branching:
    return Branching.build(type_str)


@lru_cache(maxsize=None)
def graph_for(type_str: str):
    return extended_graph(bundle(type_str).rs)


@lru_cache(maxsize=None)
def group_for(type_str: str):
    b = bundle(type_str)
    return build_group(b.dtype, b.params)


@lru_cache(maxsize=None)
def table_for(type_str: str):
    return character_table(group_for(type_str), graph_for(type_str))
