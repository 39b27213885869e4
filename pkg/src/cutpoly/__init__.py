"""Closed-form vertex enumeration for the cut polytope CUT(n) and 1-CUT(n)."""

from .altcycle import alt_cycle, alt_cycle_one_period
from .bitcodec import BitString, Order, complement, concat, decode, encode, lex_compare
from .oracle import (
    EdgeIndexing,
    VertexRecord,
    cut_vector,
    lambda_int,
    lambda_str,
    lambda_vec,
    oracle_vertices,
)
from .vertexgen import (
    GeneratorParams,
    Polytope,
    cut_vertex_code,
    vertex_code_closed,
    vertex_code_recursive,
    vertex_coords,
    vertices_stream,
)

__all__ = [
    "BitString",
    "EdgeIndexing",
    "GeneratorParams",
    "Order",
    "Polytope",
    "VertexRecord",
    "alt_cycle",
    "alt_cycle_one_period",
    "complement",
    "concat",
    "cut_vector",
    "cut_vertex_code",
    "decode",
    "encode",
    "lambda_int",
    "lambda_str",
    "lambda_vec",
    "lex_compare",
    "oracle_vertices",
    "vertex_code_closed",
    "vertex_code_recursive",
    "vertex_coords",
    "vertices_stream",
]
