import logging
import sys

import click

from config.config import get_config
from config.log_config import LogConfig
from src.models.run_models import Command, OutputFormat, RunConfig
from src.models.transport_models import parse_rational
from src.ricci_service.errors import PreconditionViolated
from src.ricci_service.processor import RicciProcessor

logger = logging.getLogger(__name__)

# --random given without a count
CONFIGURED_COUNT = 0


def run(config, settings=None):
    """Run one command and return the result dict"""
    settings = settings or get_config()
    return RicciProcessor(settings).run(config)


def _parse_edge(ctx, param, value):
    if value is None:
        return None
    parts = value.split(',')
    try:
        u, v = (int(p) for p in parts)
    except ValueError:
        raise click.BadParameter(f"expected U,V with integer vertices, got {value!r}")
    return u, v


def _parse_eps(ctx, param, value):
    if value is None:
        return None
    try:
        return parse_rational(value)
    except PreconditionViolated as e:
        raise click.BadParameter(e.message)


def _parse_q_list(ctx, param, value):
    if value is None:
        return []
    try:
        return [int(q) for q in value.split(',') if q.strip()]
    except ValueError:
        raise click.BadParameter(f"expected a comma-separated list of integers, got {value!r}")


def _graph_options(func):
    func = click.option('--generate', 'generator', metavar='NAME[:ARGS]',
                        help='Built-in family, e.g. petersen or paley:13')(func)
    func = click.option('--graph', 'graph_file', metavar='FILE',
                        help='Edge-list or JSON graph file')(func)
    return func


def _emit(result):
    if result['output']:
        click.echo(result['output'], nl=False)
    for error in result['errors']:
        click.echo(f"Error: {error}", err=True)
    sys.exit(result['exit_code'])


def create_cli(config_name=None):
    """Build the click command group"""

    @click.group(context_settings={'help_option_names': ['-h', '--help']})
    @click.option('--env', 'env_name', default=config_name, help='Configuration name (development, testing, production)')
    @click.option('-v', '--verbose', is_flag=True, help='Log at DEBUG level')
    @click.pass_context
    def cli(ctx, env_name, verbose):
        """Exact edge curvature on graphs"""
        try:
            settings = get_config(env_name)
        except ValueError as e:
            raise click.BadParameter(str(e), param_hint='--env')
        LogConfig.configure('DEBUG' if verbose else settings.LOG_LEVEL)
        ctx.obj = settings

    def dispatch(ctx, **kwargs):
        result = run(RunConfig(**kwargs), ctx.obj)
        logger.info("%s finished with exit code %d", kwargs['command'].value, result['exit_code'])
        _emit(result)

    @cli.command()
    @_graph_options
    @click.option('--edge', callback=_parse_edge, metavar='U,V')
    @click.option('--all', 'all_edges', is_flag=True, help='Every edge in lexicographic order')
    @click.option('--certify', is_flag=True, help='Use the matching formula with its plan/potential certificate')
    @click.option('--eps', callback=_parse_eps, metavar='N/D', help='Report kappa_eps / eps instead of 2 kappa_1/2')
    @click.option('--format', 'fmt', type=click.Choice(['json', 'csv']), default='json')
    @click.pass_context
    def curvature(ctx, graph_file, generator, edge, all_edges, certify, eps, fmt):
        """Condensed curvature of one edge or of every edge"""
        dispatch(ctx, command=Command.CURVATURE, graph_file=graph_file, generator=generator, edge=edge,
                 all_edges=all_edges, certify=certify, eps=eps, format=OutputFormat(fmt))

    @cli.command()
    @_graph_options
    @click.option('--edge', callback=_parse_edge, metavar='U,V')
    @click.pass_context
    def decompose(ctx, graph_file, generator, edge):
        """Core neighborhood of an edge"""
        dispatch(ctx, command=Command.DECOMPOSE, graph_file=graph_file, generator=generator, edge=edge)

    @cli.command()
    @_graph_options
    @click.option('--edge', callback=_parse_edge, metavar='U,V')
    @click.pass_context
    def matching(ctx, graph_file, generator, edge):
        """Maximum matching between N_x and N_y with alternating reach and Hall data"""
        dispatch(ctx, command=Command.MATCHING, graph_file=graph_file, generator=generator, edge=edge)

    @cli.command()
    @_graph_options
    @click.pass_context
    def spectrum(ctx, graph_file, generator):
        """Normalized Laplacian spectrum and lambda_1 checks"""
        dispatch(ctx, command=Command.SPECTRUM, graph_file=graph_file, generator=generator)

    @cli.command()
    @_graph_options
    @click.option('--random', 'random_graphs', type=int, is_flag=False, default=None,
                  flag_value=CONFIGURED_COUNT, metavar='[COUNT]',
                  help='Check a seeded corpus of random connected graphs instead; without COUNT (or with 0) '
                       'the configured VERIFY_RANDOM_GRAPHS is used')
    @click.option('--seed', type=int, default=None)
    @click.pass_context
    def verify(ctx, graph_file, generator, random_graphs, seed):
        """Rigidity and spectral consistency checks"""
        if random_graphs == CONFIGURED_COUNT:
            random_graphs = ctx.obj.VERIFY_RANDOM_GRAPHS
        dispatch(ctx, command=Command.VERIFY, graph_file=graph_file, generator=generator,
                 random_graphs=random_graphs, seed=seed)

    @cli.command()
    @click.option('--paley', callback=_parse_q_list, metavar='Q[,Q...]', help='Primes congruent to 1 mod 4')
    @click.pass_context
    def scan(ctx, paley):
        """Experimental: Paley graph curvature against 1/2 + 1/(2 beta)"""
        dispatch(ctx, command=Command.SCAN, paley=paley)

    @cli.command()
    @click.argument('spec', metavar='NAME[:ARGS]')
    @click.option('--format', 'fmt', type=click.Choice(['edgelist', 'json']), default='edgelist')
    @click.pass_context
    def generate(ctx, spec, fmt):
        """Print a built-in graph"""
        dispatch(ctx, command=Command.GENERATE, generator=spec, format=OutputFormat(fmt))

    return cli


def main():
    create_cli()(prog_name="ricci")
