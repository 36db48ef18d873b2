"""
Base común de los comandos del banco de trabajo
"""
import json
from dataclasses import dataclass
from pathlib import Path

from django.conf import settings
from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError

from realtrees.elements import parse_alphabet
from realtrees.exceptions import (
    AlphabetMismatchError,
    DomainError,
    OrdinalError,
    UndecidedError,
)
from realtrees.metric import check_alphabets, unfold_cap
from realtrees.ordinals import parse_ordinal
from realtrees.serializers import parse, parse_isometry
from realtrees.validators import validate_cap, validate_rational

EXIT_PROPERTY_FAILURE = 1
EXIT_USAGE = 2
EXIT_UNDECIDED = 3


@dataclass(frozen=True)
class RunConfig:
    """Configuración de una ejecución: alfabeto, tope, semilla y formato"""

    alphabet: object
    cap: int
    seed: int
    output_format: str

    @classmethod
    def from_options(cls, options):
        alphabet = parse_alphabet(options.get('alphabet') or settings.RTREE_DEFAULT_ALPHABET)
        cap = unfold_cap(options.get('cap'))
        validate_cap(cap)
        seed = options.get('seed')
        if seed is None:
            seed = settings.RTREE_DEFAULT_SEED
        return cls(alphabet, cap, seed, options.get('format') or 'text')


def _message(exc):
    text = ' '.join(exc.messages)
    invariant = (getattr(exc, 'params', None) or {}).get('invariant')
    if invariant:
        text += f' [{invariant}]'
    return text


class RealTreeCommand(BaseCommand):
    formats = ('text', 'json')

    def add_arguments(self, parser):
        parser.add_argument(
            '--alphabet',
            help="Alfabeto por defecto ('finite 3' o 'countable') para ficheros sin cabecera",
        )
        parser.add_argument(
            '--cap',
            type=int,
            help='Tope de eventos de desdoblamiento (por defecto RTREE_UNFOLD_CAP)',
        )
        parser.add_argument(
            '--format',
            choices=self.formats,
            default=self.formats[0],
            help='Formato de salida',
        )
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def handle(self, *args, **options):
        try:
            self.config = RunConfig.from_options(options)
            self.run(self.config, **options)
        except UndecidedError as exc:
            raise CommandError(str(exc), returncode=EXIT_UNDECIDED)
        except ValidationError as exc:
            raise CommandError(_message(exc), returncode=EXIT_USAGE)
        except (AlphabetMismatchError, DomainError, OrdinalError) as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE)

    def run(self, config, **options):
        raise NotImplementedError

    def read_source(self, source):
        """Un fichero, o una forma escrita en línea si empieza por '('"""
        if source.lstrip().startswith('('):
            return source
        try:
            return Path(source).read_text(encoding='utf-8')
        except OSError as exc:
            raise CommandError(f'No se puede leer {source}: {exc}', returncode=EXIT_USAGE)

    def load_element(self, source):
        return parse(self.read_source(source), self.config.alphabet)

    def load_elements(self, *sources):
        elements = [self.load_element(source) for source in sources]
        check_alphabets(*elements)
        return elements

    def load_isometry(self, source):
        return parse_isometry(self.read_source(source), self.config.alphabet)

    def ordinal(self, text):
        return parse_ordinal(text)

    def rational(self, text):
        return validate_rational(text)

    def emit(self, text, payload):
        if self.config.output_format == 'json':
            self.stdout.write(json.dumps(payload, indent=2, ensure_ascii=False))
        else:
            self.stdout.write(text)

    def fail(self, message):
        raise CommandError(message, returncode=EXIT_PROPERTY_FAILURE)
