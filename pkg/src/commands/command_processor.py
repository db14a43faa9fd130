#!/usr/bin/env python3
"""
Command Processor for PRISMA
Dispatches CLI subcommands to the workbench and renders results as text or JSON
"""

import json
import logging
from typing import Any, Callable, Dict, List, Tuple

from colorama import Fore, Style

from src.filtration.complexity import Orientation
from src.simplicial.chain import Chain
from src.workbench import serialization as codec

Result = Tuple[int, Any, str]

EXIT_OK = 0
EXIT_FAILED = 1


class CommandProcessor:
    """CLI command processor for the PRISMA workbench"""

    def __init__(self, core, output_format: str = 'text', color: bool = True, progress: bool = True):
        self.logger = logging.getLogger(__name__)
        self.core = core
        self.output_format = output_format
        self.color = color
        self.progress = progress

        # Subcommand handlers; each returns (exit code, JSON payload, text rendering)
        self.commands: Dict[str, Callable[[Any], Result]] = {
            'tc': self._tc,
            'tr': self._tr,
            'boundary': self._boundary,
            'homotopy': self._homotopy,
            'prism': self._prism,
            'complexity': self._complexity,
            'enumerate': self._enumerate,
            'homology': self._homology,
            'verify': self._verify,
            'cover': self._cover,
        }

    def process(self, args) -> int:
        """Run one parsed command, print its result and return the exit code"""
        handler = self.commands.get(args.command)
        if handler is None:
            raise ValueError(f"no handler for command '{args.command}'")
        self.logger.debug(f"Processing command: {args.command}")
        code, payload, text = handler(args)
        print(json.dumps(payload, indent=2) if self.output_format == 'json' else text)
        return code

    def _paint(self, text: str, color: str) -> str:
        return f"{color}{text}{Style.RESET_ALL}" if self.color else text

    @staticmethod
    def _chain_result(c: Chain) -> Result:
        return EXIT_OK, codec.chain_to_record(c), str(c)

    # Transfers and differentials
    def _tc(self, args) -> Result:
        return self._chain_result(self.core.tc(codec.decode_input(args.surjection, 'x')))

    def _tr(self, args) -> Result:
        return self._chain_result(self.core.tr(codec.decode_input(args.simplex, 'e')))

    def _boundary(self, args) -> Result:
        c = codec.decode_input(args.input, args.space)
        return self._chain_result(self.core.boundary(c, getattr(args, 'sign_rule', None)))

    def _homotopy(self, args) -> Result:
        return self._chain_result(self.core.homotopy(codec.decode_input(args.simplex, 'e'), args.map))

    # Prisms
    def _prism(self, args) -> Result:
        u = codec.decode_surjection(args.surjection)
        if args.view == 'vertices':
            table = self.core.prism_vertices(u)
            text = '\n'.join(f"({','.join(map(str, coords))}) -> {w}" for coords, w in table)
            return EXIT_OK, codec.vertex_table_records(table), text
        if args.view == 'fundamental':
            s = self.core.prism_fundamental(u)
            return EXIT_OK, {'simplex': [list(w) for w in s.words]}, str(s)

        records, lines = [], []
        for m in self.core.prism_maximal(u):
            records.append({'path': list(m.path), 'sign': m.sign, 'degenerate': m.is_degenerate,
                            'simplex': [list(w) for w in m.simplex.words]})
            flag = '  [degenerate]' if m.is_degenerate else ''
            lines.append(f"{'+' if m.sign > 0 else '-'} ({','.join(map(str, m.path))}) {m.simplex}{flag}")
        return EXIT_OK, records, '\n'.join(lines)

    def _cover(self, args) -> Result:
        s = codec.decode_simplex(args.simplex)
        u = self.core.cover(s, args.bound)
        if u is None:
            return EXIT_OK, {'surjection': None}, "no covering surjection within the bound"
        return EXIT_OK, {'surjection': list(u.word)}, str(u)

    # Filtration
    def _complexity(self, args) -> Result:
        cell = self.core.complexity(codec.decode_cellular(args.input))
        lines = []
        for ((i, j), c), (_, orientation) in zip(cell.mu.entries, cell.last_orientation):
            first, second = (i, j) if orientation is Orientation.I_BEFORE_J else (j, i)
            lines.append(f"c_{i}{j} = {c}  ({first} before {second})")
        return EXIT_OK, codec.cell_record(cell), '\n'.join(lines)

    # Bases and homology
    def _enumerate(self, args) -> Result:
        basis = self.core.enumerate(args.space, args.arity, args.degree)
        encode = codec.encode_simplex if args.space == 'e' else codec.encode_surjection
        words = [encode(b) for b in basis]
        text = '\n'.join([str(b) for b in basis] + [f"count {len(basis)}"])
        return EXIT_OK, {'space': args.space, 'arity': args.arity, 'degree': args.degree,
                         'count': len(basis), 'basis': words}, text

    def _homology(self, args) -> Result:
        groups = self.core.homology(args.space, args.arity, args.max_degree, args.filtration)
        return EXIT_OK, [g.to_record() for g in groups], '\n'.join(map(str, groups))

    # Verification
    def _verify(self, args) -> Result:
        sweep = self.core.sweep_config(
            max_arity=args.max_arity,
            max_degree=args.max_degree,
            coverage_bound=args.coverage_bound,
            jobs=args.jobs,
            suites=args.suite,
            sign_rule=getattr(args, 'sign_rule', None),
        )
        reports = self.core.verify(sweep, progress=self.progress)
        summary = self.core.summary(reports)
        code = EXIT_OK if summary['passed'] == summary['suites'] else EXIT_FAILED
        payload = {'summary': summary, 'reports': [r.to_record() for r in reports]}
        return code, payload, self._verify_text(reports, summary)

    def _verify_text(self, reports, summary: Dict[str, int], shown: int = 5) -> str:
        lines: List[str] = []
        for report in reports:
            status = self._paint('PASS', Fore.GREEN) if report.passed else self._paint('FAIL', Fore.RED)
            lines.append(f"{status} {report.suite:<17} {report.instances_checked:>7} instances  "
                         f"{report.wall_time:.2f}s")
            for f in report.failures[:shown]:
                lines.append(f"     input {f['input']}: expected {f['expected']}, got {f['actual']}")
            if len(report.failures) > shown:
                lines.append(f"     ... {len(report.failures) - shown} more")
        lines.append(f"{summary['passed']}/{summary['suites']} suites passed, "
                     f"{summary['failures']} failure(s) over {summary['instances']} instances")
        return '\n'.join(lines)
