"""
boolskel.config
~~~~~~~~~~~~~~~

Reduction and run configuration.
"""

import os
from dataclasses import dataclass, field
from typing import List, Optional, Union

from boolskel.exceptions import ConfigError
from boolskel.types import UNLIMITED, InputFormat, OutputFormat, SimilarityMetric, Unlimited

FaninLimit = Union[int, Unlimited]

_DEFAULTS = {
    'seed': 2024,
    'jobs': 1,
    'log_level': 'warn',
}

_UNLIMITED_SPELLINGS = ('inf', 'unlimited', '∞')


def parse_k(value: Union[str, int, Unlimited]) -> FaninLimit:
    if value is UNLIMITED:
        return UNLIMITED
    if isinstance(value, str):
        text = value.strip().lower()
        if text in _UNLIMITED_SPELLINGS:
            return UNLIMITED
        try:
            value = int(text)
        except ValueError:
            raise ConfigError(f'invalid fanin limit {value!r}')
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ConfigError(f'fanin limit must be >= 1 or "inf", got {value!r}')
    return value


def parse_k_sweep(value: str) -> List[FaninLimit]:
    """Accepts "1..10" ranges, comma lists ("1,2,inf") or a mix of both"""
    limits: List[FaninLimit] = []
    for part in value.split(','):
        part = part.strip()
        if not part:
            continue
        if '..' in part:
            low, _, high = part.partition('..')
            start, stop = parse_k(low), parse_k(high)
            if start is UNLIMITED or stop is UNLIMITED or start > stop:
                raise ConfigError(f'invalid K range {part!r}')
            limits.extend(range(start, stop + 1))
        else:
            limits.append(parse_k(part))
    if not limits:
        raise ConfigError(f'empty K sweep {value!r}')
    return limits


@dataclass(frozen=True)
class ReductionConfig:
    k: FaninLimit = UNLIMITED
    deterministic_order: bool = True

    def __post_init__(self):
        object.__setattr__(self, 'k', parse_k(self.k))

    def preserves(self, fanin_size: int) -> bool:
        """True when a node with this many fanins is kept by the fanin limit"""
        if self.k is UNLIMITED:
            return False
        return fanin_size >= self.k


@dataclass
class RunConfig:
    input: Optional[str] = None
    input_format: InputFormat = InputFormat.AUTO
    k: Optional[FaninLimit] = None
    k_sweep: List[FaninLimit] = field(default_factory=list)
    output: Optional[str] = None
    out_format: Optional[OutputFormat] = None
    verify: bool = False
    seed: int = _DEFAULTS['seed']
    jobs: int = _DEFAULTS['jobs']
    metric: SimilarityMetric = SimilarityMetric.JACCARD

    def __post_init__(self):
        if self.k is not None:
            self.k = parse_k(self.k)
        if self.jobs < 1:
            raise ConfigError(f'jobs must be >= 1, got {self.jobs}')
        if self.seed < 0:
            raise ConfigError(f'seed must be non-negative, got {self.seed}')

    @property
    def reduction(self) -> ReductionConfig:
        return ReductionConfig(k=self.k if self.k is not None else UNLIMITED)

    @classmethod
    def from_namespace(cls, ns) -> 'RunConfig':
        try:
            input_format = InputFormat(getattr(ns, 'format', None) or InputFormat.AUTO.value)
            out_format = getattr(ns, 'out_format', None)
            out_format = OutputFormat(out_format) if out_format else None
            metric = SimilarityMetric(getattr(ns, 'metric', None) or SimilarityMetric.JACCARD.value)
        except ValueError as e:
            raise ConfigError(str(e))
        k_sweep = getattr(ns, 'k_sweep', None)
        return cls(input=getattr(ns, 'input', None),
                   input_format=input_format,
                   k=getattr(ns, 'k', None),
                   k_sweep=parse_k_sweep(k_sweep) if k_sweep else [],
                   output=getattr(ns, 'output', None),
                   out_format=out_format,
                   verify=bool(getattr(ns, 'verify', False)),
                   seed=_DEFAULTS['seed'] if getattr(ns, 'seed', None) is None else ns.seed,
                   jobs=_DEFAULTS['jobs'] if getattr(ns, 'jobs', None) is None else ns.jobs,
                   metric=metric)


def log_level_from_env(environ=None) -> str:
    environ = os.environ if environ is None else environ
    return environ.get('BOOLSKEL_LOG', _DEFAULTS['log_level']).strip().lower()
