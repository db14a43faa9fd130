#!/usr/bin/env python3
"""
Suite runner for PRISMA
Runs verification suites over a sweep, serially or across a process pool,
and collects deterministic reports.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import partial
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from tqdm import tqdm

from src.surjection_complex.differential import SIGN_RULES
from src.utils.config import Config
from src.utils.errors import ConfigError, UnknownSuiteError
from src.utils.logger import PerformanceLogger
from src.workbench.suites import SUITE_NAMES, SUITES, CheckContext, Failure

logger = logging.getLogger(__name__)


def _parse_suites(suites: Union[str, Iterable[str]]) -> Tuple[str, ...]:
    names = [s.strip() for s in suites.split(',')] if isinstance(suites, str) else list(suites)
    if 'all' in names:
        return tuple(SUITE_NAMES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise UnknownSuiteError(f"unknown suite(s) {', '.join(unknown)}; choose from {', '.join(SUITE_NAMES)} or all")
    # registry order keeps reports stable
    return tuple(n for n in SUITE_NAMES if n in names)


@dataclass(frozen=True)
class SweepConfig:
    """Bounds and settings of one verification run"""

    max_arity: int = 4
    max_degree: int = 3
    coverage_bound: int = 3
    jobs: int = 1
    suites: Tuple[str, ...] = tuple(SUITE_NAMES)
    sign_rule: str = 'cellular'
    max_basis_size: Optional[int] = 250000

    def __post_init__(self):
        object.__setattr__(self, 'suites', _parse_suites(self.suites))
        checks = [
            ('max_arity', self.max_arity, 1),
            ('max_degree', self.max_degree, 0),
            ('coverage_bound', self.coverage_bound, 1),
            ('jobs', self.jobs, 1),
        ]
        for name, value, minimum in checks:
            if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
                raise ConfigError(f"sweep.{name} must be an integer >= {minimum}, got {value!r}")
        if self.sign_rule not in SIGN_RULES:
            raise ConfigError(f"sweep.sign_rule must be one of {', '.join(SIGN_RULES)}, got {self.sign_rule!r}")
        if self.max_basis_size is not None and self.max_basis_size < 1:
            raise ConfigError(f"limits.max_basis_size must be positive, got {self.max_basis_size}")

    @classmethod
    def from_config(cls, config: Config, **overrides) -> 'SweepConfig':
        """Sweep settings from the config file, with non-None overrides applied"""
        sweep = config.section('sweep')
        values = {key: sweep[key] for key in
                  ('max_arity', 'max_degree', 'coverage_bound', 'jobs', 'suites', 'sign_rule') if key in sweep}
        limits = config.section('limits')
        if 'max_basis_size' in limits:
            values['max_basis_size'] = limits['max_basis_size']
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)

    def context(self) -> CheckContext:
        return CheckContext(sign_rule=self.sign_rule, limit=self.max_basis_size)


@dataclass
class SuiteReport:
    suite: str
    instances_checked: int = 0
    failures: List[Failure] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_record(self, include_time: bool = True) -> Dict[str, Any]:
        record = asdict(self)
        record['passed'] = self.passed
        if not include_time:
            record.pop('wall_time')
        return record


def _check_all(check, items: Sequence, context: CheckContext, jobs: int, progress: bool, label: str) -> List[List[Failure]]:
    bound = partial(check, context=context)
    bar = partial(tqdm, total=len(items), desc=label, unit='item', disable=not progress, leave=False)
    if jobs <= 1 or len(items) < 2:
        return list(bar(map(bound, items)))
    chunksize = max(1, len(items) // (jobs * 8))
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(bar(executor.map(bound, items, chunksize=chunksize)))


def run_suite(name: str, config: SweepConfig, progress: bool = False) -> SuiteReport:
    """Check every item of a suite; failures come back in item order whatever the worker count"""
    if name not in SUITES:
        raise UnknownSuiteError(f"unknown suite '{name}'; choose from {', '.join(SUITE_NAMES)}")
    suite = SUITES[name]
    report = SuiteReport(name)
    with PerformanceLogger(logger, f"suite {name}") as timer:
        items = suite.items(config)
        logger.debug(f"Suite {name}: {len(items)} items, {config.jobs} job(s)")
        results = _check_all(suite.check, items, config.context(), config.jobs, progress, name)
        report.instances_checked = len(items)
        report.failures = [f for item_failures in results for f in item_failures]
    report.wall_time = timer.duration
    if report.failures:
        logger.warning(f"Suite {name}: {len(report.failures)} failure(s) in {report.instances_checked} items")
    return report


def run_suites(config: SweepConfig, progress: bool = False) -> List[SuiteReport]:
    return [run_suite(name, config, progress) for name in config.suites]
