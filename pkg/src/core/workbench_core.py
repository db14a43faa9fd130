#!/usr/bin/env python3
"""
PRISMA Core - Workbench Engine
Holds configuration and resource limits and exposes every workbench operation
on decoded objects.
"""

import logging
from typing import Dict, List, Optional, Union

from src.combinatorics.surjections import Surjection
from src.filtration.complexity import CellDescriptor, cell_descriptor
from src.prisms.coverage import covering_surjection
from src.prisms.prism import fundamental_simplex, maximal_simplices, MaximalSimplex, vertex_table
from src.simplicial.bar_construction import EChain, Simplex, boundary_e, enumerate_simplices
from src.simplicial.chain import Chain
from src.surjection_complex.differential import XChain, boundary_x, enumerate_surjections
from src.transfers.homotopy import get_simplex_map, homotopy_chain
from src.transfers.transfer_maps import tc, tr
from src.utils.config import Config
from src.utils.errors import InvalidInputError
from src.workbench.homology import HomologyGroup, homology
from src.workbench.runner import SuiteReport, SweepConfig, run_suites


class WorkbenchCore:
    """Main PRISMA workbench"""

    def __init__(self, config: Optional[Config] = None, config_path: Optional[str] = None):
        self.logger = logging.getLogger(__name__)
        self.config = config or Config(config_path)
        self.limit = self.config.section('limits').get('max_basis_size', 250000)
        sweep = self.config.section('sweep')
        self.sign_rule = sweep.get('sign_rule', 'cellular')
        self.coverage_bound = sweep.get('coverage_bound', 3)
        self.logger.debug(f"Workbench ready (basis limit {self.limit}, sign rule {self.sign_rule})")

    # Transfers
    def tc(self, c: XChain) -> EChain:
        return tc(c)

    def tr(self, c: EChain) -> XChain:
        return tr(c)

    def homotopy(self, c: EChain, map_name: str = 'tc-tr') -> EChain:
        return homotopy_chain(c, get_simplex_map(map_name))

    def boundary(self, c: Chain, sign_rule: Optional[str] = None) -> Chain:
        if isinstance(c, XChain):
            return boundary_x(c, sign_rule or self.sign_rule)
        if isinstance(c, EChain):
            return boundary_e(c)
        raise InvalidInputError(f"no differential for {type(c).__name__}")

    # Prisms
    def prism_vertices(self, u: Surjection):
        return vertex_table(u)

    def prism_maximal(self, u: Surjection) -> List[MaximalSimplex]:
        return maximal_simplices(u, self.limit)

    def prism_fundamental(self, u: Surjection) -> Simplex:
        return fundamental_simplex(u)

    def cover(self, s: Simplex, bound: Optional[int] = None) -> Optional[Surjection]:
        return covering_surjection(s, bound if bound is not None else self.coverage_bound, self.limit)

    # Filtration
    def complexity(self, x: Union[Surjection, Simplex]) -> CellDescriptor:
        return cell_descriptor(x)

    # Bases and homology
    def enumerate(self, space: str, arity: int, degree: int) -> List:
        if space == 'e':
            return enumerate_simplices(arity, degree, self.limit)
        if space == 'x':
            return enumerate_surjections(arity, degree, self.limit)
        raise InvalidInputError(f"unknown space '{space}' (choose from e, x)")

    def homology(self, space: str, arity: int, max_degree: int,
                 filtration_level: Optional[int] = None) -> List[HomologyGroup]:
        return homology(space, arity, max_degree, filtration_level, self.limit)

    # Verification
    def sweep_config(self, **overrides) -> SweepConfig:
        return SweepConfig.from_config(self.config, **overrides)

    def verify(self, sweep: SweepConfig, progress: bool = False) -> List[SuiteReport]:
        self.logger.info(f"Verifying {', '.join(sweep.suites)} "
                         f"(arity <= {sweep.max_arity}, degree <= {sweep.max_degree}, jobs {sweep.jobs})")
        return run_suites(sweep, progress)

    def summary(self, reports: List[SuiteReport]) -> Dict[str, int]:
        return {
            'suites': len(reports),
            'passed': sum(1 for r in reports if r.passed),
            'failures': sum(len(r.failures) for r in reports),
            'instances': sum(r.instances_checked for r in reports),
        }
