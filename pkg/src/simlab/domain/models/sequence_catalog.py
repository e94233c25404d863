"""
Secuencias de evaluación estándar (clases A-F) y configuraciones de codificación.
"""

from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class SequenceSpec:
    name: str
    seq_class: str
    width: int
    height: int
    frame_rate: float

    @property
    def frame_size(self) -> int:
        return self.width * self.height

    @property
    def sequence_id(self) -> str:
        # RaceHorses aparece en las clases C y D
        return f"{self.name}_{self.seq_class}"


EVALUATION_SEQUENCES: Tuple[SequenceSpec, ...] = (
    SequenceSpec("PeopleOnStreet", "A", 2560, 1600, 30),
    SequenceSpec("Traffic", "A", 2560, 1600, 30),
    SequenceSpec("Kimono", "B", 1920, 1080, 24),
    SequenceSpec("RaceHorses", "C", 832, 480, 30),
    SequenceSpec("BasketballPass", "D", 416, 240, 50),
    SequenceSpec("BlowingBubbles", "D", 416, 240, 50),
    SequenceSpec("BQSquare", "D", 416, 240, 60),
    SequenceSpec("RaceHorses", "D", 416, 240, 30),
    SequenceSpec("vidyo3", "E", 1280, 720, 60),
    SequenceSpec("SlideEditing", "F", 1280, 720, 30),
)

CODING_CONFIGS: Tuple[str, ...] = ("intra", "lowdelay", "lowdelay_P", "randomaccess")

DEFAULT_QPS: Tuple[int, ...] = (10, 32, 45)
EXTENDED_QPS: Tuple[int, ...] = tuple(range(5, 51, 5))

FRAMES_PER_GROUP = 8

RESOLUTIONS = frozenset((s.width, s.height) for s in EVALUATION_SEQUENCES)
