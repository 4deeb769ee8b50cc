"""
Command-line surface, registered on the Flask application's click group.

Exit codes: 0 on success, 1 when a verification row fails (or a command
fails unexpectedly), 2 on usage errors.
"""

import json
import logging
from functools import wraps

import click
from flask import current_app

from vtorus.models import Axis, EdgeKind, TorusParams, VerificationRun
from vtorus.utils.errors import VtError

logger = logging.getLogger(__name__)

SCHEMES = ('shortest', 'translation', 'search')


def handle_errors(f):
    """Turn library errors into click errors; unexpected ones are logged first"""
    @wraps(f)
    def decorated_function(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except (click.ClickException, click.exceptions.Exit):
            raise
        except VtError as e:
            raise click.ClickException(e.message)
        except Exception as e:
            logger.error(f"Command {f.__name__} failed: {e}", exc_info=True)
            raise click.ClickException(str(e))
    return decorated_function


def build_params(r, s):
    try:
        return TorusParams(r, s)
    except VtError as e:
        raise click.UsageError(e.message)


def parse_vertex(ctx, param, value):
    if value is None:
        return None
    try:
        x, y = (int(part) for part in value.split(','))
    except ValueError:
        raise click.BadParameter(f"expected 'x,y', got {value!r}")
    return (x, y)


def params_options(f):
    f = click.option('--s', 's', type=int, required=True, help='Poloidal parameter s (≥ 2)')(f)
    f = click.option('--r', 'r', type=int, required=True, help='Toroidal parameter r (≥ 2)')(f)
    return f


def format_option(f):
    return click.option('--format', 'output_format', type=click.Choice(['table', 'json']),
                        default='table', show_default=True)(f)


def echo_mapping(data, output_format):
    if output_format == 'json':
        click.echo(json.dumps(data, indent=2, sort_keys=True, default=str))
        return
    width = max(len(str(key)) for key in data)
    for key, value in data.items():
        click.echo(f"{str(key).ljust(width)}  {value}")


def echo_rows(rows, columns):
    widths = {column: max([len(column)] + [len(str(row[column])) for row in rows]) for column in columns}
    click.echo('  '.join(column.ljust(widths[column]) for column in columns))
    for row in rows:
        click.echo('  '.join(str(row[column]).ljust(widths[column]) for column in columns))


def build_graph(r, s):
    from vtorus.services.torus_service import TorusService

    return TorusService().build_vt(build_params(r, s))


def routing_for(g, scheme, budget, seed):
    from vtorus.services.routing_service import RoutingService

    service = RoutingService()
    if scheme == 'shortest':
        routing = service.shortest_routing(g)
    elif scheme == 'translation':
        routing = service.translation_routing(g)
    else:
        return service.search_balanced_routing(g, budget, seed)
    return routing, service.congestion_profile(g, routing)


def finish_matrix(matrix, params, sections, output_format, save, options):
    rows = matrix.to_rows()
    if output_format == 'json':
        click.echo(json.dumps({'rows': rows, 'counts': matrix.counts()}, indent=2, sort_keys=True))
    else:
        echo_rows(rows, ['claim_id', 'instance', 'expected', 'observed', 'status'])
        counts = matrix.counts()
        click.echo(f"\n{counts['pass']} pass, {counts['fail']} fail, {counts['experimental']} experimental")

    if save:
        from vtorus import init_database

        init_database(current_app._get_current_object())
        run = VerificationRun.record_matrix(params, sections, matrix, options)
        click.echo(f"Saved run {run.id}", err=True)

    if not matrix.passed:
        raise click.exceptions.Exit(1)


def register_commands(app):
    """Attach every vt command to app.cli"""

    @app.cli.command('build')
    @params_options
    @click.option('--out', type=click.Path(dir_okay=False), help='Write the graph as JSON')
    @handle_errors
    def build_command(r, s, out):
        """Build VT(r,s) and optionally write it as JSON."""
        g = build_graph(r, s)
        if out:
            from vtorus.services.export_service import ExportService

            click.echo(ExportService().export_json(g, out))
        else:
            click.echo(f"VT({r},{s}): {g.order} vertices, {g.size} edges")

    @app.cli.command('stats')
    @params_options
    @format_option
    @handle_errors
    def stats_command(r, s, output_format):
        """Structure counts, diameter and geodesic profile."""
        from vtorus.services.metric_service import MetricService
        from vtorus.services.torus_service import TorusService

        g = build_graph(r, s)
        metric = MetricService()
        data = TorusService().structure_summary(g)
        data['diameter'] = metric.diameter(g)
        data['maximal_isometric_path_lengths'] = sorted(metric.maximal_isometric_path_samples(g))
        data['uniform_geodesic'] = metric.is_uniform_geodesic(g)
        echo_mapping(data, output_format)

    @app.cli.command('cycles')
    @params_options
    @format_option
    @handle_errors
    def cycles_command(r, s, output_format):
        """Acute and obtuse cycle families with revolutions."""
        from vtorus.services.cycle_service import CycleService

        g = build_graph(r, s)
        service = CycleService()
        data = {'helix': service.helix_signature(g.params).to_dict()}
        for kind in EdgeKind:
            check = service.cycle_partition_check(g, kind)
            check['revolutions'] = sorted({service.revolutions(g, c) for c in service.distinct_cycles(g, kind)})
            data[kind.value] = check
        echo_mapping(data, output_format)

    @app.cli.command('verify')
    @params_options
    @click.option('--all', 'run_all', is_flag=True, help='Include the exhaustive, cut and routing sections')
    @click.option('--save', is_flag=True, help='Store the run in the history database')
    @format_option
    @handle_errors
    def verify_command(r, s, run_all, save, output_format):
        """Run the structural theorem checks; exit 1 on any failure."""
        from vtorus.services.report_service import SECTIONS, ReportService

        params = build_params(r, s)
        sections = list(SECTIONS) if run_all else ['structure', 'cycles', 'quotient', 'metric']
        matrix = ReportService().run_report(params, sections)
        finish_matrix(matrix, params, sections, output_format, save, {'all': run_all})

    @app.cli.command('report')
    @params_options
    @click.option('--section', 'sections', multiple=True, help='Section to run (repeatable); default all')
    @click.option('--budget', type=int, help='Routing search budget')
    @click.option('--seed', type=int, help='Seed for random routings and the search')
    @click.option('--out', type=click.Path(dir_okay=False), help='Also write the matrix as CSV')
    @click.option('--save', is_flag=True, help='Store the run in the history database')
    @format_option
    @handle_errors
    def report_command(r, s, sections, budget, seed, out, save, output_format):
        """Full verification matrix."""
        from vtorus.services.export_service import ExportService
        from vtorus.services.report_service import SECTIONS, ReportService

        params = build_params(r, s)
        unknown = [name for name in sections if name not in SECTIONS]
        if unknown:
            raise click.UsageError(f"unknown section {unknown[0]!r}; choose from {', '.join(SECTIONS)}")

        sections = list(sections or SECTIONS)
        matrix = ReportService().run_report(params, sections, budget, seed)
        if out:
            ExportService().export_csv(matrix, out)
        finish_matrix(matrix, params, sections, output_format, save, {'budget': budget, 'seed': seed})

    @app.cli.command('wiener')
    @params_options
    @click.option('--axis', type=click.Choice([a.value for a in Axis]), default='y', show_default=True)
    @format_option
    @handle_errors
    def wiener_command(r, s, axis, output_format):
        """Wiener index by brute force and by band cuts."""
        from vtorus.services.cut_service import CutService

        g = build_graph(r, s)
        service = CutService()
        brute = service.wiener_brute(g)
        via_cuts = service.wiener_via_cuts(g, service.band_edgecut_partition(g, Axis(axis)))
        echo_mapping({
            'brute': brute.value,
            'cut_decomposition': via_cuts.value,
            'per_cut': via_cuts.per_cut_contributions,
            'agree': brute.value == via_cuts.value,
        }, output_format)

    @app.cli.command('cuts')
    @params_options
    @click.option('--axis', type=click.Choice([a.value for a in Axis]), default='y', show_default=True)
    @click.option('--scheme', type=click.Choice(SCHEMES), default='shortest', show_default=True)
    @click.option('--budget', type=int)
    @click.option('--seed', type=int)
    @handle_errors
    def cuts_command(r, s, axis, scheme, budget, seed):
        """Band edgecuts and the sum-of-paths ledger for a routing."""
        from vtorus.services.cut_service import CutService

        g = build_graph(r, s)
        service = CutService()
        part = service.band_edgecut_partition(g, Axis(axis))
        routing, _ = routing_for(g, scheme, budget, seed)
        ledger = service.sum_paths_ledger(g, routing, part)

        rows = []
        for cut, entry in zip(part.cuts, ledger.entries):
            row = entry.to_dict()
            row.update({'edges': len(cut.edges), 'U': len(cut.side_u), 'W': len(cut.side_w)})
            rows.append(row)
        echo_rows(rows, ['cut', 'edges', 'U', 'W', 'k_uw', 'k_u', 'k_w', 'total'])
        click.echo(f"\nledger {ledger.grand_total} / paths {ledger.path_length_total}")
        if not ledger.balanced:
            raise click.exceptions.Exit(1)

    @app.cli.command('routing')
    @params_options
    @click.option('--scheme', type=click.Choice(SCHEMES), default='shortest', show_default=True)
    @click.option('--budget', type=int, help='Search budget (search scheme)')
    @click.option('--seed', type=int)
    @format_option
    @handle_errors
    def routing_command(r, s, scheme, budget, seed, output_format):
        """Congestion profile of a routing scheme."""
        from vtorus.services.routing_service import RoutingService

        g = build_graph(r, s)
        routing, profile = routing_for(g, scheme, budget, seed)
        service = RoutingService()
        data = profile.to_dict()
        data.update({
            'scheme': scheme,
            'paths': len(routing),
            'optimal_bound': str(service.optimal_congestion_bound(g)),
            'lower_bound': service.congestion_lower_bound(g),
        })
        echo_mapping(data, output_format)

    @app.cli.command('export-dot')
    @params_options
    @click.option('--out', type=click.Path(dir_okay=False), required=True)
    @handle_errors
    def export_dot_command(r, s, out):
        """Write VT(r,s) as Graphviz DOT."""
        from vtorus.services.export_service import ExportService

        click.echo(ExportService().export_dot(build_graph(r, s), out))

    @app.cli.command('export-json')
    @params_options
    @click.option('--out', type=click.Path(dir_okay=False), required=True)
    @handle_errors
    def export_json_command(r, s, out):
        """Write VT(r,s) as JSON."""
        from vtorus.services.export_service import ExportService

        click.echo(ExportService().export_json(build_graph(r, s), out))

    @app.cli.command('export-csv')
    @params_options
    @click.option('--scheme', type=click.Choice(SCHEMES), default='shortest', show_default=True)
    @click.option('--budget', type=int)
    @click.option('--seed', type=int)
    @click.option('--out', type=click.Path(dir_okay=False), required=True)
    @handle_errors
    def export_csv_command(r, s, scheme, budget, seed, out):
        """Write the per-edge congestion profile as CSV."""
        from vtorus.services.export_service import ExportService

        g = build_graph(r, s)
        _, profile = routing_for(g, scheme, budget, seed)
        click.echo(ExportService().export_csv(profile, out))

    @app.cli.command('classify')
    @params_options
    @click.option('--x', 'x', callback=parse_vertex, required=True, help="First vertex as 'x,y'")
    @click.option('--y', 'y', callback=parse_vertex, required=True, help="Second vertex as 'x,y'")
    @format_option
    @handle_errors
    def classify_command(r, s, x, y, output_format):
        """Classify a vertex pair and count its isometric paths."""
        from vtorus.services.metric_service import MetricService

        g = build_graph(r, s)
        for vertex in (x, y):
            if not g.has_vertex(vertex):
                raise click.BadParameter(f"{vertex} is not a vertex of VT({r},{s})")
        if x == y:
            raise click.BadParameter(f"--x and --y must differ, both are {x}")
        result = MetricService().classify_pair(g, x, y).to_dict()
        echo_mapping(result, output_format)

    @app.cli.command('history')
    @click.option('--limit', type=int, default=10, show_default=True)
    @format_option
    @handle_errors
    def history_command(limit, output_format):
        """List stored verification runs, latest first."""
        from vtorus import init_database

        init_database(current_app._get_current_object())
        runs = (VerificationRun.query
                .order_by(VerificationRun.created_at.desc(), VerificationRun.id.desc())
                .limit(limit).all())
        rows = [run.to_dict() for run in runs]
        if output_format == 'json':
            click.echo(json.dumps(rows, indent=2, sort_keys=True))
        elif not rows:
            click.echo('No verification runs stored')
        else:
            echo_rows(rows, ['id', 'r', 's', 'status', 'pass', 'fail', 'experimental', 'created_at'])
