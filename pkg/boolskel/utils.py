from pathlib import Path
from typing import Iterable, Optional, Union

import numpy as np
from bitarray import bitarray

from boolskel.types import InputFormat

_EXTENSIONS = {
    '.aag': InputFormat.AIGER,
    '.aig': InputFormat.AIGER,
    '.graphml': InputFormat.GRAPHML,
    '.xml': InputFormat.GRAPHML,
}


def zero_bits(n: int) -> bitarray:
    row = bitarray(n)
    row.setall(False)
    return row


def bits_to_numpy(rows: Iterable[bitarray], n: int) -> np.ndarray:
    matrix = np.zeros((n, n), dtype=bool)
    for i, row in enumerate(rows):
        matrix[i, :] = np.array(row.tolist(), dtype=bool)
    return matrix


def detect_format(path: Union[str, Path], head: Optional[bytes] = None) -> InputFormat:
    suffix = Path(path).suffix.lower()
    if suffix in _EXTENSIONS:
        return _EXTENSIONS[suffix]
    if head is not None:
        stripped = head.lstrip()
        if stripped.startswith((b'aag', b'aig')):
            return InputFormat.AIGER
        if stripped.startswith(b'<'):
            return InputFormat.GRAPHML
    return InputFormat.AUTO


def format_ratio(value: float) -> str:
    return f'{value:.4f}'


def format_tsv_row(values: Iterable) -> str:
    return '\t'.join(format_ratio(v) if isinstance(v, float) else str(v) for v in values)
