from math import gcd

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from tests.conftest import vt
from vtorus.models import CirculantGraph, EdgeKind, TorusParams, VtEdge, VtVertex
from vtorus.services.torus_service import TorusService
from vtorus.utils.errors import DegenerateJump, ParamTooSmall, ParityViolation, UnknownEdge, UnknownVertex

service = TorusService()

SMALL = [(r, s) for r in range(2, 9) for s in range(2, 9)]


class TestBuild:

    def test_vt22_counts(self, vt22):
        assert vt22.order == 8
        assert vt22.size == 16
        assert {len(vt22.neighbors(v)) for v in vt22.vertices} == {4}

    def test_vt45_kind_split(self, vt45):
        assert vt45.order == 40
        assert vt45.size == 80
        assert len(vt45.edges(EdgeKind.ACUTE)) == 40
        assert len(vt45.edges(EdgeKind.OBTUSE)) == 40

    @pytest.mark.parametrize('r,s', [(1, 5), (5, 1), (0, 0)])
    def test_params_too_small(self, r, s):
        with pytest.raises(ParamTooSmall, match='r and s must be ≥ 2'):
            TorusParams(r, s)

    @pytest.mark.parametrize('r,s', SMALL)
    def test_structure_summary(self, r, s):
        summary = service.structure_summary(vt(r, s))
        assert summary['vertices'] == 2 * r * s
        assert summary['edges'] == 4 * r * s
        assert summary['degrees'] == [4]
        assert summary['kind_splits'] == [(2, 2)]
        assert summary['acute_edges'] == summary['obtuse_edges']
        assert summary['connected']
        assert summary['bipartite']

    def test_vertices_are_row_major(self, vt23):
        assert list(vt23.vertices) == sorted(vt23.vertices)
        assert vt23.vertices[:3] == ((0, 0), (0, 2), (0, 4))

    def test_networkx_view_is_frozen(self, vt22):
        with pytest.raises(nx.NetworkXError):
            vt22.to_networkx().add_edge((0, 0), (2, 2))


class TestVertexArithmetic:

    def test_wraparound(self, vt45):
        assert vt45.vertex_add((7, 9), (1, 1)) == (0, 0)

    def test_identity(self, vt45):
        assert vt45.vertex_add((2, 2), (0, 0)) == (2, 2)

    def test_mixed_parity_rejected(self, vt45):
        with pytest.raises(ParityViolation):
            vt45.vertex_add((2, 2), (1, 1))

    def test_translate_allows_mixed_parity(self, vt45):
        assert vt45.translate((2, 2), (1, 1)) == (3, 3)

    def test_sub_is_inverse_of_translate(self, vt45):
        p, q = VtVertex(3, 7), VtVertex(6, 0)
        assert vt45.translate(p, vt45.vertex_sub(p, q)) == q

    @settings(deadline=None)
    @given(r=st.integers(2, 6), s=st.integers(2, 6), data=st.data())
    def test_translation_preserves_edges(self, r, s, data):
        g = vt(r, s)
        shift = data.draw(st.sampled_from(g.vertices))
        edge = data.draw(st.sampled_from(g.edges()))
        image = g.edge_between(g.translate(edge.u, shift), g.translate(edge.v, shift))
        assert image.kind is edge.kind

    @settings(deadline=None)
    @given(r=st.integers(2, 6), s=st.integers(2, 6), data=st.data())
    def test_even_vertices_form_a_group(self, r, s, data):
        g = vt(r, s)
        evens = [v for v in g.vertices if v.is_even]
        p = data.draw(st.sampled_from(evens))
        q = data.draw(st.sampled_from(evens))
        total = g.vertex_add(p, q)
        assert total.is_even
        assert g.vertex_add(total, g.negate(q)) == p


class TestNeighbors:

    def test_vt45_origin(self, vt45):
        assert vt45.neighbors((0, 0)) == [
            ((1, 1), EdgeKind.ACUTE),
            ((7, 9), EdgeKind.ACUTE),
            ((1, 9), EdgeKind.OBTUSE),
            ((7, 1), EdgeKind.OBTUSE),
        ]

    def test_vt22_origin_sees_every_odd_vertex(self, vt22):
        assert {v for v, _ in vt22.neighbors((0, 0))} == {(1, 1), (3, 3), (1, 3), (3, 1)}

    def test_invalid_vertex(self, vt45):
        with pytest.raises(UnknownVertex):
            vt45.neighbors((0, 1))

    def test_edge_lookup(self, vt45):
        edge = vt45.edge_between((1, 1), (0, 0))
        assert edge == VtEdge.canonical((0, 0), (1, 1), EdgeKind.ACUTE)
        assert edge.kind is EdgeKind.ACUTE
        with pytest.raises(UnknownEdge):
            vt45.edge_between((0, 0), (2, 2))


class TestRowsAndCols:

    def test_sizes(self, vt45):
        rows, cols = vt45.rows_and_cols()
        assert len(rows) == 8 and {len(row) for row in rows} == {5}
        assert len(cols) == 10 and {len(col) for col in cols} == {4}

    def test_rows_partition_vertices(self, vt46):
        rows, _ = vt46.rows_and_cols()
        assert frozenset().union(*rows) == frozenset(vt46.vertices)
        assert sum(len(row) for row in rows) == vt46.order


class TestCirculant:

    def test_c6_4_edges(self):
        edges = {frozenset(e) for e in service.build_circulant(6, 4).edges()}
        assert edges == {frozenset(e) for e in [(0, 4), (1, 5), (2, 0), (3, 1), (4, 2), (5, 3)]}

    def test_unit_jump_is_a_cycle(self):
        assert nx.is_isomorphic(service.build_circulant(5, 1).to_networkx(), nx.cycle_graph(5))

    def test_degenerate(self):
        with pytest.raises(DegenerateJump):
            service.build_circulant(6, 3)

    def test_residue_partition_examples(self):
        assert service.residue_partition(4, 6) == [(0, 4, 2), (1, 5, 3)]
        assert service.residue_partition(1, 5) == [(0, 1, 2, 3, 4)]
        assert [len(c) for c in service.residue_partition(6, 9)] == [3, 3, 3]

    def test_cycle_partition_examples(self):
        assert service.circulant_cycle_partition(CirculantGraph(6, 4)) == [(0, 4, 2), (1, 5, 3)]
        assert [len(c) for c in service.circulant_cycle_partition(CirculantGraph(5, 2))] == [5]
        assert service.circulant_cycle_partition(CirculantGraph(8, 6)) == [(0, 6, 4, 2), (1, 7, 5, 3)]

    @pytest.mark.parametrize('b', range(3, 21))
    def test_cycle_partition_matches_residues(self, b):
        for a in range(1, b):
            if 2 * a == b:
                continue
            cycles = service.circulant_cycle_partition(CirculantGraph(b, a))
            d = gcd(a, b)
            assert len(cycles) == d
            assert {len(c) for c in cycles} == {b // d}
            assert {frozenset(c) for c in cycles} == {frozenset(c) for c in service.residue_partition(a, b)}

    @settings(deadline=None)
    @given(b=st.integers(2, 60), data=st.data())
    def test_residue_classes_partition(self, b, data):
        a = data.draw(st.integers(1, b - 1))
        classes = service.residue_partition(a, b)
        members = [m for c in classes for m in c]
        assert sorted(members) == list(range(b))
        assert len(classes) == gcd(a, b)


class TestAcuteQuotient:

    def test_vt46_is_c6_4(self, vt46):
        quotient = service.acute_quotient(vt46)
        assert (quotient.b, quotient.a) == (6, 4)
        check = service.quotient_isomorphism(vt46)
        assert check['isomorphic']
        assert check['mapping'][VtVertex(0, 4)] == 2

    def test_vt45_connected(self, vt45):
        quotient = service.acute_quotient(vt45)
        assert (quotient.b, quotient.a) == (5, 4)
        assert nx.is_connected(quotient.to_networkx())

    def test_vt39_three_components(self):
        assert len(service.quotient_components(vt(3, 9))) == 3

    def test_degenerate_jump(self, vt44):
        with pytest.raises(DegenerateJump):
            service.acute_quotient(vt44)

    @pytest.mark.parametrize('r,s', SMALL)
    def test_component_count_is_gcd(self, r, s):
        assert len(service.quotient_components(vt(r, s))) == gcd(r, s)
