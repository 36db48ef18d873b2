"""
Comando para ejecutar las baterías de propiedades
"""
import json

from django.core.management.base import CommandError

from realtrees.suites import SUITES, run_suite

from ._base import EXIT_USAGE, RealTreeCommand


class Command(RealTreeCommand):
    help = 'Ejecuta una batería de propiedades: ' + ', '.join(SUITES)

    def add_command_arguments(self, parser):
        parser.add_argument('suite', help='Nombre de la batería')
        parser.add_argument('--cases', type=int, help='Número de casos (por defecto RTREE_SUITE_CASES)')
        parser.add_argument('--seed', type=int, help='Semilla (por defecto RTREE_SEED)')
        parser.add_argument('--alpha', help='Ordinal para la batería escape')

    def run(self, config, **options):
        name = options['suite']
        if name not in SUITES:
            raise CommandError(
                f"Batería desconocida {name!r}; disponibles: {', '.join(SUITES)}",
                returncode=EXIT_USAGE,
            )
        alpha = self.ordinal(options['alpha']) if options.get('alpha') else None
        result = run_suite(
            name,
            cases=options.get('cases'),
            seed=config.seed,
            alphabet=config.alphabet,
            cap=config.cap,
            alpha=alpha,
        )

        if config.output_format == 'json':
            self.stdout.write(json.dumps({
                'suite': result.name,
                'seed': config.seed,
                'cases': result.cases,
                'failures': result.failures,
                'ok': result.ok,
            }, indent=2, ensure_ascii=False))
        else:
            status_icon = '✅' if result.ok else '❌'
            self.stdout.write(f'{status_icon} {result.name}: {result.cases} casos, {len(result.failures)} fallos')
            for failure in result.failures:
                self.stdout.write(f'   - {failure}')

        if not result.ok:
            self.fail(f'La batería {result.name} tiene {len(result.failures)} fallos')
