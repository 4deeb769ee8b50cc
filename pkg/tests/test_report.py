import pytest

from vtorus import db
from vtorus.models import CheckStatus, TorusParams, VerificationMatrix, VerificationRow, VerificationRun
from vtorus.services.report_service import SECTIONS, ReportService


@pytest.fixture
def reports(app):
    return ReportService()


class TestVerificationMatrix:

    def test_status_rules(self):
        matrix = VerificationMatrix()
        matrix.add(VerificationRow.check('a', 'VT(2,2)', 3, 3))
        matrix.add(VerificationRow.experimental('gap', 'VT(2,2)', 0, 1))
        assert matrix.passed
        matrix.add(VerificationRow.check('b', 'VT(2,2)', 3, 4))
        assert not matrix.passed
        assert matrix.counts() == {'pass': 1, 'fail': 1, 'experimental': 1}


class TestRunReport:

    def test_vt23_full_report_passes(self, reports):
        matrix = reports.run_report(TorusParams(2, 3), budget=100, seed=0)
        failures = [row.to_dict() for row in matrix.failures]
        assert failures == []
        assert any(row.status is CheckStatus.EXPERIMENTAL for row in matrix.rows)

    def test_vt46_cycles_section(self, reports):
        matrix = reports.run_report(TorusParams(4, 6), ['cycles'])
        row = next(row for row in matrix.rows if row.claim_id == 'distinct acute cycles')
        assert (row.expected, row.observed, row.status) == ('2', '2', CheckStatus.PASS)

    def test_vt22_balance_gap_is_experimental(self, reports):
        matrix = reports.run_report(TorusParams(2, 2), ['routing'], budget=50)
        row = next(row for row in matrix.rows if row.claim_id == 'balance gap')
        assert row.status is CheckStatus.EXPERIMENTAL
        assert matrix.passed

    @pytest.mark.parametrize('r,s', [(2, 3), (4, 5), (3, 5), (3, 6)])
    def test_structural_sections_pass(self, reports, r, s):
        matrix = reports.run_report(TorusParams(r, s), ['structure', 'cycles', 'quotient', 'metric'])
        assert matrix.passed

    def test_vt45_pair_counts_are_experimental(self, reports):
        matrix = reports.run_report(TorusParams(4, 5), ['metric'])
        row = next(row for row in matrix.rows if row.claim_id == 'isometric paths at distance r')
        assert (row.expected, row.observed, row.status) == ('4', '6', CheckStatus.EXPERIMENTAL)
        assert matrix.passed

    def test_convexity_skipped_above_limit(self, app, reports):
        app.config['VT_MAX_EXHAUSTIVE_VERTICES'] = 24
        matrix = reports.run_report(TorusParams(4, 5), ['convexity'])
        assert [row.claim_id for row in matrix.rows] == ['convex cycles have 4 vertices', 'convex edgecut']
        assert all(row.status is CheckStatus.EXPERIMENTAL for row in matrix.rows)
        assert all(row.observed == 'skipped (40 > 24)' for row in matrix.rows)
        assert matrix.passed

    def test_vt45_cycles_are_not_convex(self, reports):
        matrix = reports.run_report(TorusParams(4, 5), ['metric'])
        rows = [row for row in matrix.rows if row.claim_id.endswith('cycle convex')]
        assert [(row.expected, row.observed, row.status) for row in rows] == [('False', 'False', CheckStatus.PASS)] * 2

    def test_unknown_section(self, reports):
        with pytest.raises(ValueError):
            reports.run_report(TorusParams(2, 2), ['nope'])

    def test_errors_become_fail_rows(self, reports, monkeypatch):
        def broken(g):
            raise RuntimeError('boom')

        monkeypatch.setattr(reports.metric, 'diameter', broken)
        matrix = reports.run_report(TorusParams(2, 2), ['metric'])
        row = next(row for row in matrix.rows if row.claim_id == 'diameter = max(r,s)')
        assert row.status is CheckStatus.FAIL
        assert row.observed == 'error: boom'

    def test_sections_constant(self):
        assert SECTIONS[0] == 'structure' and 'routing' in SECTIONS


class TestPersistence:

    def test_record_matrix(self, reports):
        params = TorusParams(2, 2)
        matrix = reports.run_report(params, ['structure'])
        run = VerificationRun.record_matrix(params, ['structure'], matrix, {'seed': 0})

        stored = db.session.get(VerificationRun, run.id)
        assert stored.status == 'pass'
        assert stored.pass_count == len(matrix.rows)
        assert stored.get_run_data() == {'seed': 0}
        assert [r.claim_id for r in stored.records] == [row.claim_id for row in matrix.rows]
        assert stored.to_dict(include_records=True)['sections'] == ['structure']
