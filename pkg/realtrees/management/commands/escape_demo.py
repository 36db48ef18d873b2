"""
Comando para demostrar la incompletitud de T^[alpha] con una sucesión de escape
"""
import json
from pathlib import Path

from django.conf import settings

from realtrees.construct import incompleteness_demo, transport_report
from realtrees.elements import LabelAlphabet
from realtrees.exceptions import AlphabetMismatchError
from realtrees.serializers import format_rational, serialize

from ._base import RealTreeCommand


class Command(RealTreeCommand):
    help = 'Cadena de Cauchy en T^[alpha] cuyo límite tiene complejidad alpha + 1'

    def add_command_arguments(self, parser):
        escape = settings.RTREE_ESCAPE
        parser.add_argument('--alpha', required=True, help='Ordinal >= 1')
        parser.add_argument('--kappa', default='3', help="Valencia: entero >= 3 o 'countable'")
        parser.add_argument('--steps', type=int, default=escape['STEPS'], help='Longitud N de la cadena')
        parser.add_argument('--radius', default=escape['RADIUS'], help='Radio r (racional p/q)')
        parser.add_argument('--out', help='Fichero JSON del informe')
        parser.add_argument(
            '--transport',
            help='Isometría por la que empujar la cadena (comprueba que conserva distancias)',
        )

    def run(self, config, **options):
        alpha = self.ordinal(options['alpha'])
        alphabet = LabelAlphabet.for_kappa(options['kappa'])
        report = incompleteness_demo(
            alpha, alphabet, options['steps'], self.rational(options['radius']), config.cap,
        )
        payload = report.to_json()
        failures = list(report.failures)

        if options.get('transport'):
            phi_alphabet, phi = self.load_isometry(options['transport'])
            if phi_alphabet != alphabet:
                raise AlphabetMismatchError(alphabet, phi_alphabet)
            moved = transport_report(report, phi, config.cap)
            payload['transport'] = {
                'images': [serialize(image) for image in moved.images],
                'limit_image': serialize(moved.limit_image),
                'distances_preserved': moved.distances_preserved,
                'tail_preserved': moved.tail_preserved,
            }
            if not moved.ok:
                failures.append('la isometría no conserva la cadena')

        if options.get('out'):
            Path(options['out']).write_text(json.dumps(payload, indent=2, ensure_ascii=False), encoding='utf-8')

        if config.output_format == 'json':
            self.stdout.write(json.dumps(payload, indent=2, ensure_ascii=False))
        else:
            self.write_summary(report)
            for failure in failures:
                self.stdout.write(self.style.ERROR(f'❌ {failure}'))

        if failures:
            self.fail(f'Demo de incompletitud con {len(failures)} fallos')

    def write_summary(self, report):
        self.stdout.write(f'alpha: {report.alpha}')
        self.stdout.write(f'kappa: {report.alphabet.kappa}')
        self.stdout.write(f'steps: {len(report.sequence)}')
        self.stdout.write(f'partial sum: {format_rational(report.partial_sums[-1]) if report.partial_sums else "0"}')
        self.stdout.write(f'tail distance: {format_rational(report.tail_distance)}')
        self.stdout.write(f'limit complexity: {report.limit_complexity}')
        self.stdout.write(f'member(limit, {report.alpha}): {str(report.limit_in_alpha).lower()}')
        self.stdout.write(f'limit: {serialize(report.limit)}')
