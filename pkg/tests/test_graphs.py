import numpy as np
import pytest

from conftest import small_corpus
from qwmix.errors import InvalidArgumentError, SizeLimitError
from qwmix.graphs import (
    SrgParams,
    bipartition,
    cartesian_product,
    complement,
    complete,
    cycle,
    hamming,
    is_regular,
    paley,
    parse_graph_spec,
    srg_params,
    validate_graph,
)


def eig_multiset(g, digits=9):
    return sorted(round(float(w), digits) for w in np.linalg.eigvalsh(g.adj.astype(float)))


class TestConstructors:
    def test_cycle_3_is_complete(self):
        assert np.array_equal(cycle(3).adj, complete(3).adj)

    def test_cycle_4_row_sums(self):
        assert np.all(cycle(4).adj.sum(axis=1) == 2)

    def test_cycle_5_spectrum_matches_cosines(self):
        got = eig_multiset(cycle(5))
        expected = sorted(
            round(2 * np.cos(2 * np.pi * r / 5), 9) for r in range(5)
        )
        assert got == expected

    def test_cycle_rejects_small(self):
        with pytest.raises(InvalidArgumentError):
            cycle(2)

    def test_complete_2_single_edge(self):
        assert np.array_equal(complete(2).adj, np.array([[0, 1], [1, 0]]))

    def test_complete_4_regular(self):
        assert is_regular(complete(4)) == 3

    def test_complete_5_spectrum(self):
        assert eig_multiset(complete(5)) == [-1.0, -1.0, -1.0, -1.0, 4.0]

    def test_product_k2_k2_is_c4(self):
        q2 = cartesian_product(complete(2), complete(2))
        # relabel-free check: same spectrum and degrees as C_4
        assert eig_multiset(q2) == eig_multiset(cycle(4))
        assert is_regular(q2) == 2

    def test_product_k3_k3_srg(self):
        g = cartesian_product(complete(3), complete(3))
        assert srg_params(g) == SrgParams(9, 4, 1, 2)

    def test_product_k4_k4_srg(self):
        g = cartesian_product(complete(4), complete(4))
        assert srg_params(g) == SrgParams(16, 6, 2, 2)

    def test_product_adjacency_tensor_identity(self):
        g, h = cycle(5), complete(3)
        prod = cartesian_product(g, h)
        expected = np.kron(g.adj, np.eye(3, dtype=np.int64)) + np.kron(
            np.eye(5, dtype=np.int64), h.adj
        )
        assert np.array_equal(prod.adj, expected)

    def test_hamming_1_q_is_complete(self):
        assert np.array_equal(hamming(1, 7).adj, complete(7).adj)

    def test_hamming_3_2_cube(self):
        g = hamming(3, 2)
        assert g.n == 8 and is_regular(g) == 3

    def test_hamming_2_3_srg(self):
        assert srg_params(hamming(2, 3)) == SrgParams(9, 4, 1, 2)

    def test_hamming_size_cap(self):
        with pytest.raises(SizeLimitError):
            hamming(9, 2)

    def test_paley_5_is_c5(self):
        assert np.array_equal(paley(5).adj, cycle(5).adj)

    def test_paley_9_params(self):
        assert srg_params(paley(9)) == SrgParams(9, 4, 1, 2)

    def test_paley_13_params(self):
        assert srg_params(paley(13)) == SrgParams(13, 6, 2, 3)

    def test_paley_rejects_bad_orders(self):
        for q in (7, 8, 15, 21):
            with pytest.raises(InvalidArgumentError):
                paley(q)

    def test_complement_of_complete_is_empty(self):
        g = complement(complete(5))
        assert g.adj.sum() == 0

    def test_complement_c5_self(self):
        # C_5 is self-complementary: the complement is again a 5-cycle
        comp = complement(cycle(5))
        assert is_regular(comp) == 2
        assert eig_multiset(comp) == eig_multiset(cycle(5))

    def test_complement_involution(self):
        for g in small_corpus():
            assert np.array_equal(complement(complement(g)).adj, g.adj)

    def test_complement_of_rook_srg(self):
        g = complement(cartesian_product(complete(4), complete(4)))
        assert srg_params(g) == SrgParams(16, 9, 4, 6)

    def test_validators_on_corpus(self):
        for g in small_corpus():
            validate_graph(g)


class TestPredicates:
    def test_bipartition_c4(self):
        parts = bipartition(cycle(4))
        assert parts is not None
        assert sorted(map(sorted, parts)) == [[0, 2], [1, 3]]

    def test_bipartition_c5_absent(self):
        assert bipartition(cycle(5)) is None

    def test_bipartition_cube_by_parity(self):
        g = hamming(3, 2)
        parts = bipartition(g)
        assert parts is not None and {len(parts[0]), len(parts[1])} == {4}
        # oracle: independent BFS 2-coloring by popcount parity of the
        # vertex index in the product order
        parity = {v for v in range(8) if bin(v).count("1") % 2 == 0}
        assert parts[0] in (frozenset(parity), frozenset(set(range(8)) - parity))

    def test_bipartition_valid_coloring(self):
        for g in small_corpus():
            parts = bipartition(g)
            if parts is None:
                continue
            for u in range(g.n):
                for v in range(g.n):
                    if g.adj[u, v]:
                        assert (u in parts[0]) != (v in parts[0])

    def test_is_regular(self):
        assert is_regular(cycle(9)) == 2
        assert is_regular(paley(13)) == 6

    def test_star_not_regular(self):
        from conftest import star

        assert is_regular(star(3)) is None

    def test_srg_c5(self):
        assert srg_params(cycle(5)) == SrgParams(5, 2, 0, 1)

    def test_srg_c6_absent(self):
        assert srg_params(cycle(6)) is None

    def test_srg_feasibility_identity(self):
        for g in small_corpus():
            p = srg_params(g)
            if p is not None:
                assert p.feasible()

    def test_paley_self_complementary_params(self):
        for q in (5, 13, 17):
            assert srg_params(paley(q)) == srg_params(complement(paley(q)))


class TestSpecParsing:
    def test_simple_specs(self):
        assert parse_graph_spec("cycle:6").n == 6
        assert parse_graph_spec("complete:4").label == "complete:4"
        assert parse_graph_spec("hamming:2,3").n == 9
        assert parse_graph_spec("paley:13").n == 13

    def test_product_spec(self):
        g = parse_graph_spec("product:complete:2|complete:2")
        assert g.n == 4 and is_regular(g) == 2

    def test_nested_specs(self):
        g = parse_graph_spec("complement:product:complete:4|complete:4")
        assert srg_params(g) == SrgParams(16, 9, 4, 6)

    def test_file_spec(self, tmp_path):
        path = tmp_path / "triangle.txt"
        path.write_text("011\n101\n110\n")
        g = parse_graph_spec(f"file:{path}")
        assert np.array_equal(g.adj, complete(3).adj)

    def test_file_spec_spaced(self, tmp_path):
        path = tmp_path / "edge.txt"
        path.write_text("0 1\n1 0\n")
        assert parse_graph_spec(f"file:{path}").n == 2

    def test_bad_specs(self):
        for spec in ("", "foo:3", "cycle:x", "product:complete:2", "hamming:3"):
            with pytest.raises(InvalidArgumentError):
                parse_graph_spec(spec)

    def test_file_spec_asymmetric_rejected(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("01\n00\n")
        with pytest.raises(InvalidArgumentError):
            parse_graph_spec(f"file:{path}")


class TestSizeCap:
    def test_cap_default(self):
        with pytest.raises(SizeLimitError):
            cycle(257)

    def test_cap_env_override(self, monkeypatch):
        monkeypatch.setenv("QWMIX_SIZE_CAP", "10")
        with pytest.raises(SizeLimitError):
            cycle(11)
        assert cycle(10).n == 10
