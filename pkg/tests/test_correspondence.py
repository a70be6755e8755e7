import pytest

from cubecovers import (
    BitMatrix,
    Digraph,
    EnumerationCapExceeded,
    brute_count_characteristic_matrices,
    brute_count_dags,
    brute_count_orientable_characteristic_matrices,
    brute_count_orientable_dags,
    brute_counts,
    characteristic_matrix,
    count_dags,
    count_orientable_dags,
    digraph_from_characteristic,
    enumerate_acyclic,
    enumerate_digraphs,
    unit_diagonal_matrices,
)


# ----------------------------------------------------------------------
# the map and its inverse
# ----------------------------------------------------------------------


def test_empty_graph_maps_to_identity():
    for n in range(5):
        assert characteristic_matrix(Digraph.empty(n)) == BitMatrix.identity(n)


def test_sample_pair_maps_bit_exactly(sample_graph, sample_matrix):
    assert characteristic_matrix(sample_graph) == sample_matrix
    assert digraph_from_characteristic(sample_matrix) == sample_graph


def test_single_edge_maps_to_lower_triangle():
    g = Digraph.from_edges(2, [(0, 1)])
    m = characteristic_matrix(g)
    assert m.to_bits() == ((1, 0), (1, 1))
    assert digraph_from_characteristic(m) == g


def test_identity_matrix_maps_to_empty_graph():
    assert digraph_from_characteristic(BitMatrix.identity(3)) == Digraph.empty(3)


def test_inverse_rejects_zero_diagonal():
    with pytest.raises(ValueError, match="diagonal"):
        digraph_from_characteristic(BitMatrix.from_rows([[1, 1], [1, 0]]))


@pytest.mark.parametrize("n", range(5))
def test_round_trip_from_graphs(n):
    for g in enumerate_digraphs(n):
        assert digraph_from_characteristic(characteristic_matrix(g)) == g


@pytest.mark.parametrize("n", range(5))
def test_round_trip_from_unit_diagonal_matrices(n):
    for m in unit_diagonal_matrices(n):
        assert characteristic_matrix(digraph_from_characteristic(m)) == m


# ----------------------------------------------------------------------
# structure transfer
# ----------------------------------------------------------------------


@pytest.mark.parametrize("n", range(4))
def test_acyclic_exactly_when_all_minors_unit(n):
    for g in enumerate_digraphs(n):
        assert g.is_acyclic() == characteristic_matrix(g).has_unit_principal_minors()


@pytest.mark.parametrize("n", range(5))
def test_membership_exactly_when_preimage_acyclic(n):
    # Same equivalence read from the matrix side, through the inverse map.
    for m in unit_diagonal_matrices(n):
        assert m.has_unit_principal_minors() == digraph_from_characteristic(m).is_acyclic()


@pytest.mark.parametrize("n", range(4))
def test_even_out_degrees_exactly_when_columns_odd(n):
    # Holds for every digraph, not only acyclic ones: column i of the image
    # is row i of the adjacency matrix plus the diagonal 1.
    for g in enumerate_digraphs(n):
        assert g.all_out_degrees_even() == characteristic_matrix(g).has_odd_column_sums()


@pytest.mark.parametrize("n", range(4))
def test_image_of_acyclic_graphs_is_the_membership_set(n):
    images = {characteristic_matrix(g) for g in enumerate_acyclic(n)}
    members = {m for m in unit_diagonal_matrices(n) if m.has_unit_principal_minors()}
    assert images == members
    assert len(images) == count_dags(n)  # injectivity on the acyclic graphs


# ----------------------------------------------------------------------
# brute-force counters, digraph side
# ----------------------------------------------------------------------


@pytest.mark.parametrize(
    "n,dags,orientable",
    [(0, 1, 1), (1, 1, 1), (2, 3, 1), (3, 25, 4), (4, 543, 43)],
)
def test_brute_counts_small(n, dags, orientable):
    assert brute_counts(n) == (dags, orientable)
    assert brute_count_dags(n) == dags
    assert brute_count_orientable_dags(n) == orientable


@pytest.mark.parametrize("n", range(5))
def test_brute_counts_match_stream_lengths(n):
    got = brute_counts(n)
    assert got.dags == sum(1 for _ in enumerate_acyclic(n))
    assert got.orientable == sum(
        1 for g in enumerate_acyclic(n) if g.all_out_degrees_even()
    )


def test_partition_invariance():
    n = 4
    total = brute_counts(n)
    span = 1 << (n * (n - 1))
    # a deliberately uneven three-way split
    cuts = [0, span // 7, span // 2 + 13, span]
    pieces = [brute_counts(n, start=a, stop=b) for a, b in zip(cuts, cuts[1:])]
    assert sum(p.dags for p in pieces) == total.dags
    assert sum(p.orientable for p in pieces) == total.orientable


def test_jobs_do_not_change_totals():
    assert brute_counts(4, jobs=3) == brute_counts(4, jobs=1)


def test_brute_counts_validates_input():
    with pytest.raises(EnumerationCapExceeded):
        brute_counts(7)
    with pytest.raises(ValueError):
        brute_counts(3, start=-1)
    with pytest.raises(ValueError):
        brute_counts(3, start=5, stop=3)
    with pytest.raises(ValueError):
        brute_counts(3, jobs=0)
    with pytest.raises(ValueError):
        brute_counts(-1)


def test_brute_counts_cap_can_be_raised_for_range_slices():
    # A tiny slice of the n=7 space is fine once the cap is lifted.
    got = brute_counts(7, start=0, stop=1, cap=7)
    assert got == (1, 1)  # code 0 is the empty graph


# ----------------------------------------------------------------------
# brute-force counters, matrix side
# ----------------------------------------------------------------------


@pytest.mark.parametrize("n,expected", [(0, 1), (1, 1), (2, 3), (3, 25), (4, 543)])
def test_matrix_membership_counts(n, expected):
    assert brute_count_characteristic_matrices(n) == expected
    assert expected == count_dags(n)


@pytest.mark.parametrize("n,expected", [(0, 1), (1, 1), (2, 1), (3, 4), (4, 43)])
def test_orientable_matrix_counts(n, expected):
    assert brute_count_orientable_characteristic_matrices(n) == expected
    assert expected == count_orientable_dags(n)


def test_matrix_counters_enforce_their_cap():
    with pytest.raises(EnumerationCapExceeded):
        brute_count_characteristic_matrices(5)
    with pytest.raises(EnumerationCapExceeded):
        brute_count_orientable_characteristic_matrices(5)
