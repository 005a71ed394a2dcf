"""Kohnert diagrams, Demazure characters and atoms, and restricted insertion."""

from ._kohnert import (
    atom_expansion,
    atom_poly,
    atomic_kohnert_diagrams,
    composition_diagram,
    demazure_char,
    diagram_weight,
    excise,
    generate_ssrt,
    insert_row,
    is_k_positive,
    is_rectified,
    iterated_insert,
    k_addable_positions,
    k_addition,
    kd_intersection,
    kd_membership,
    key_to_atom,
    kohnert_diagrams,
    kohnert_move,
    left_swap_leq,
    pinned_kohnert_diagrams,
    pinned_poly,
    pinned_swap_leq,
    proper_labeling,
    render_diagram,
    schubert_expansion,
    schur,
    signed_key_expansion,
    sort_to_partition,
    tableau_to_biword,
    thread_decomposition,
    thread_weight,
)

__all__ = [name for name in dir() if not name.startswith("_")]
