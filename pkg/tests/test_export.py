import csv
import json
from collections import Counter

import pytest

from vtorus.services.export_service import ExportService
from vtorus.services.routing_service import RoutingService
from vtorus.utils.errors import ExportError


@pytest.fixture
def exporter(app):
    return ExportService()


class TestJson:

    def test_vt22_counts(self, app, exporter, vt22, tmp_path):
        path = exporter.export_json(vt22, 'g.json')
        data = json.loads((tmp_path / 'g.json').read_text())
        assert path == str(tmp_path / 'g.json')
        assert data['params'] == {'r': 2, 's': 2}
        assert len(data['vertices']) == 8
        assert len(data['edges']) == 16
        assert data['vertices'] == sorted(data['vertices'])
        assert data['edges'][0] == {'u': [0, 0], 'v': [1, 1], 'kind': 'acute'}

    def test_byte_stable(self, exporter, vt45, tmp_path):
        exporter.export_json(vt45, 'a.json')
        exporter.export_json(vt45, 'b.json')
        assert (tmp_path / 'a.json').read_bytes() == (tmp_path / 'b.json').read_bytes()


class TestDot:

    def test_round_trip(self, exporter, vt45):
        exporter.export_dot(vt45, 'g.dot')
        parsed = Counter(exporter.read_dot_edges('g.dot'))
        expected = Counter((e.u.label(), e.v.label(), e.kind.value) for e in vt45.edges())
        assert parsed == expected

    def test_nodes_labeled(self, exporter, vt22):
        text = exporter.dot_text(vt22)
        assert text.startswith('graph "VT(2,2)" {')
        assert text.count('[label=') == 8
        assert '"0,0" -- "1,1" [kind=acute];' in text


class TestCsv:

    def test_congestion_profile(self, exporter, vt22, tmp_path):
        service = RoutingService()
        profile = service.congestion_profile(vt22, service.shortest_routing(vt22))
        exporter.export_csv(profile, 'congestion.csv')

        with open(tmp_path / 'congestion.csv', newline='') as handle:
            rows = list(csv.DictReader(handle))
        assert len(rows) == 16
        assert sum(int(row['congestion']) for row in rows) == 40
        assert list(rows[0].keys()) == ['u', 'v', 'kind', 'congestion']

    def test_delimiter_from_config(self, app, vt22, tmp_path):
        app.config['VT_CSV_DELIMITER'] = ';'
        ExportService().export_csv([{'a': 1, 'b': 2}], 'semi.csv')
        assert (tmp_path / 'semi.csv').read_text().splitlines() == ['a;b', '1;2']

    def test_unwritable_path(self, exporter, tmp_path):
        blocker = tmp_path / 'file'
        blocker.write_text('x')
        with pytest.raises(ExportError) as excinfo:
            exporter.export_csv([{'a': 1}], str(blocker / 'out.csv'))
        assert str(blocker / 'out.csv') in str(excinfo.value)
