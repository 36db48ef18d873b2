"""
Excepciones del dominio de árboles reales
"""


class RealTreeError(Exception):
    """Error base de la aplicación realtrees"""


class UndecidedError(RealTreeError):
    """
    Se alcanzó el tope de desdoblamiento antes de encontrar una diferencia
    o un ciclo. No es un error matemático sino un límite de representación.
    """

    def __init__(self, events, message=None):
        self.events = events
        super().__init__(
            message or f'UNDECIDED: tope de {events} eventos alcanzado sin decidir'
        )


class AlphabetMismatchError(RealTreeError):
    """Dos elementos no comparten el mismo alfabeto de etiquetas"""

    def __init__(self, left, right):
        self.left = left
        self.right = right
        super().__init__(f'Alfabetos distintos: ({left}) frente a ({right})')


class OrdinalError(RealTreeError, ValueError):
    """Operación ordinal fuera de su dominio"""


class DomainError(RealTreeError, ValueError):
    """Precondición de una operación incumplida"""
