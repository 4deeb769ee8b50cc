from fractions import Fraction

import pytest

from tests.conftest import vt
from vtorus.models import CongestionProfile, Routing, VtVertex
from vtorus.services.cut_service import CutService
from vtorus.services.metric_service import MetricService
from vtorus.services.routing_service import RoutingService
from vtorus.utils.errors import InvalidPath

service = RoutingService()
metric = MetricService()
cuts = CutService()


class TestRoutingModel:

    def test_paths_stored_from_smaller_endpoint(self):
        routing = Routing.from_paths([((1, 1), (0, 0))])
        assert routing.path((1, 1), (0, 0)) == ((0, 0), (1, 1))

    def test_rejects_non_simple(self):
        with pytest.raises(InvalidPath):
            Routing.from_paths([((0, 0), (1, 1), (0, 0), (1, 1))])

    def test_validate_catches_non_edges(self, vt22):
        with pytest.raises(InvalidPath):
            Routing.from_paths([((0, 0), (2, 2))]).validate(vt22)


class TestShortestRouting:

    def test_vt22(self, vt22):
        routing = service.shortest_routing(vt22)
        assert len(routing) == 28
        assert routing.total_length() == 40
        assert routing.is_complete(vt22)

    def test_vt23_size(self, vt23):
        assert len(service.shortest_routing(vt23)) == 66

    def test_paths_are_geodesics(self, vt45):
        for path in service.shortest_routing(vt45):
            assert len(path) - 1 == metric.distance(vt45, path[0], path[-1]) <= 5

    def test_greedy_tie_break(self, vt45):
        assert service.greedy_path(vt45, (0, 0), (0, 2)) == ((0, 0), (1, 1), (0, 2))


class TestTranslationRouting:

    def test_vt22_conserves_wiener(self, vt22):
        profile = service.congestion_profile(vt22, service.translation_routing(vt22))
        assert profile.total == 40

    @pytest.mark.parametrize('r,s', [(2, 2), (2, 3), (3, 4), (4, 4)])
    def test_complete_and_conserving(self, r, s):
        g = vt(r, s)
        routing = service.translation_routing(g)
        routing.validate(g)
        assert routing.is_complete(g)
        assert service.congestion_profile(g, routing).total == cuts.wiener_brute(g).value

    def test_self_inverse_classes(self, vt44, vt45):
        assert service.self_inverse_classes(vt44) == [(0, 4), (4, 0), (4, 4)]
        assert service.self_inverse_classes(vt45) == [(4, 0)]

    def test_vt44_loads_invariant_under_shift(self, vt44):
        loads = service.class_loads(vt44)
        shift = VtVertex(2, 2)
        for edge, load in loads.items():
            image = vt44.edge_between(vt44.translate(edge.u, shift), vt44.translate(edge.v, shift))
            assert loads[image] == load

    @pytest.mark.parametrize('r,s', [(2, 3), (3, 4)])
    def test_loads_invariant_under_every_translation(self, r, s):
        g = vt(r, s)
        loads = service.class_loads(g)
        for shift in g.vertices:
            for edge, load in loads.items():
                assert loads[g.edge_between(g.translate(edge.u, shift), g.translate(edge.v, shift))] == load

    def test_class_loads_add_up(self, vt44):
        routing = service.translation_routing(vt44)
        total = service.congestion_profile(vt44, routing).per_edge
        regular = service.class_loads(vt44)
        self_inverse = service.class_loads(vt44, self_inverse=True)
        assert all(total[e] == regular[e] + self_inverse[e] for e in vt44.edges())


class TestCongestionProfile:

    def test_vt22_shortest(self, vt22):
        profile = service.congestion_profile(vt22, service.shortest_routing(vt22))
        assert profile.mean == Fraction(5, 2)
        assert not profile.balanced
        assert profile.maximum >= 3
        assert profile.minimum <= profile.mean <= profile.maximum

    def test_random_shortest_routings_respect_lower_bound(self, vt22):
        lower = service.congestion_lower_bound(vt22)
        assert lower == 3
        for seed in range(20):
            profile = service.congestion_profile(vt22, cuts.random_routing(vt22, seed))
            assert profile.maximum >= lower

    def test_rows(self, vt22):
        rows = service.congestion_profile(vt22, service.shortest_routing(vt22)).to_rows()
        assert len(rows) == 16
        assert sum(row['congestion'] for row in rows) == 40
        assert rows[0] == {'u': '0,0', 'v': '1,1', 'kind': 'acute', 'congestion': rows[0]['congestion']}

    def test_from_loads(self, vt22):
        profile = CongestionProfile.from_loads({e: 2 for e in vt22.edges()})
        assert profile.balanced
        assert profile.gap == 0


class TestBounds:

    def test_vt22(self, vt22):
        assert service.optimal_congestion_bound(vt22) == Fraction(5, 2)

    def test_vt23(self, vt23):
        assert vt23.size == 24
        assert service.optimal_congestion_bound(vt23) == Fraction(cuts.wiener_brute(vt23).value, vt23.size)
        assert service.optimal_congestion_bound(vt23) == Fraction(5)

    @pytest.mark.parametrize('r,s', [(2, 2), (3, 4)])
    def test_bound_times_edges_is_wiener(self, r, s):
        g = vt(r, s)
        assert service.optimal_congestion_bound(g) * g.size == cuts.wiener_brute(g).value


class TestSearch:

    def test_budget_zero_returns_translation_routing(self, vt22):
        routing, profile = service.search_balanced_routing(vt22, budget=0, seed=0)
        initial = service.translation_routing(vt22)
        assert routing.paths == initial.paths
        assert profile == service.congestion_profile(vt22, initial)

    def test_vt22_gap_stays_positive(self, vt22):
        _, profile = service.search_balanced_routing(vt22, budget=1000, seed=0)
        assert profile.gap >= 1
        assert profile.total == 40

    @pytest.mark.parametrize('r,s', [(2, 2), (2, 3), (3, 3)])
    def test_gap_never_increases(self, r, s):
        g = vt(r, s)
        start = service.congestion_profile(g, service.translation_routing(g))
        routing, profile = service.search_balanced_routing(g, budget=200, seed=7, restarts=2)
        assert profile.gap <= start.gap
        assert routing.is_complete(g)
        assert service.congestion_profile(g, routing).per_edge == profile.per_edge

    def test_deterministic_under_seed(self, vt23):
        first = service.search_balanced_routing(vt23, budget=100, seed=3)
        second = service.search_balanced_routing(vt23, budget=100, seed=3)
        assert first[0].paths == second[0].paths

    def test_upper_bound_not_below_lower_bound(self, vt23):
        upper = service.edge_forwarding_upper_bound(vt23, budget=50, seed=1)
        assert upper >= service.congestion_lower_bound(vt23)
