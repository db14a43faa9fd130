#!/usr/bin/env python3
"""Tests for configuration, logging and the error hierarchy"""

import logging

import pytest
import yaml

from src.utils.config import Config
from src.utils.errors import (
    ConfigError,
    DegenerateError,
    InvalidInputError,
    ParseError,
    PrismaError,
    ResourceExceededError,
)
from src.utils.logger import PerformanceLogger, set_log_level, setup_logger
from src.workbench.runner import SweepConfig


class TestConfig:
    def test_missing_file_gives_defaults(self, tmp_path):
        config = Config(str(tmp_path / 'absent.yaml'))
        assert config.section('sweep')['max_arity'] == 4
        assert config.get('limits') == {'max_basis_size': 250000}

    def test_partial_file_is_merged(self, tmp_path):
        path = tmp_path / 'partial.yaml'
        path.write_text(yaml.safe_dump({'sweep': {'max_degree': 5}}), encoding='utf-8')
        sweep = Config(str(path)).section('sweep')
        assert sweep['max_degree'] == 5 and sweep['max_arity'] == 4

    def test_environment_variable(self, config_file):
        config_file(sweep={'jobs': 3})
        assert Config().section('sweep')['jobs'] == 3

    @pytest.mark.parametrize("text", ["sweep: [1, 2", "- just\n- a list\n"])
    def test_bad_files(self, tmp_path, text):
        path = tmp_path / 'bad.yaml'
        path.write_text(text, encoding='utf-8')
        with pytest.raises(ConfigError):
            Config(str(path))

    def test_non_mapping_section(self, tmp_path):
        path = tmp_path / 'odd.yaml'
        path.write_text(yaml.safe_dump({'limits': 7}), encoding='utf-8')
        with pytest.raises(ConfigError):
            Config(str(path)).section('limits')

    def test_write_default_config(self, tmp_path):
        target = Config(str(tmp_path / 'absent.yaml')).write_default_config(str(tmp_path / 'fresh.yaml'))
        assert Config(str(target)).settings == Config(str(tmp_path / 'absent.yaml')).settings

    def test_sweep_from_config(self, config_file):
        config_file(sweep={'max_arity': 2, 'suites': 'd2_e,d2_x'}, limits={'max_basis_size': 50})
        sweep = SweepConfig.from_config(Config(), max_degree=1, jobs=None)
        assert (sweep.max_arity, sweep.max_degree, sweep.jobs) == (2, 1, 1)
        assert sweep.suites == ('d2_e', 'd2_x') and sweep.max_basis_size == 50


class TestLogging:
    def test_console_only(self):
        logger = setup_logger(level='WARNING', log_to_file=False)
        assert [type(h) for h in logger.handlers] == [logging.StreamHandler]
        assert logger.level == logging.WARNING
        set_log_level(logger.name, 'DEBUG')
        assert logger.handlers[0].level == logging.DEBUG
        assert logger.isEnabledFor(logging.DEBUG)

    def test_raising_the_level_keeps_file_handlers(self, tmp_path):
        logger = setup_logger(level='INFO', log_dir=str(tmp_path), log_to_file=True)
        try:
            set_log_level(logger.name, 'ERROR')
            console = [h for h in logger.handlers if not isinstance(h, logging.FileHandler)]
            files = [h for h in logger.handlers if isinstance(h, logging.FileHandler)]
            assert [h.level for h in console] == [logging.ERROR]
            assert logging.DEBUG in [h.level for h in files]
        finally:
            setup_logger(level='WARNING', log_to_file=False)

    def test_file_handlers(self, tmp_path):
        logger = setup_logger(level='INFO', log_dir=str(tmp_path), log_to_file=True)
        try:
            assert len(logger.handlers) == 3
            assert any(p.name.startswith('prisma_') for p in tmp_path.iterdir())
        finally:
            setup_logger(level='WARNING', log_to_file=False)

    def test_performance_logger(self, caplog):
        logger = logging.getLogger('perf-test')
        with caplog.at_level(logging.INFO, logger='perf-test'):
            with PerformanceLogger(logger, 'sweep') as timer:
                pass
        assert timer.duration >= 0
        assert 'sweep completed' in caplog.text

    def test_performance_logger_reports_failure(self, caplog):
        logger = logging.getLogger('perf-test')
        with caplog.at_level(logging.INFO, logger='perf-test'):
            with pytest.raises(RuntimeError):
                with PerformanceLogger(logger, 'sweep'):
                    raise RuntimeError('boom')
        assert 'sweep failed' in caplog.text


class TestErrors:
    def test_hierarchy(self):
        assert issubclass(DegenerateError, InvalidInputError)
        assert issubclass(InvalidInputError, ValueError)
        assert issubclass(ResourceExceededError, PrismaError)

    def test_parse_error_position(self):
        e = ParseError("bad token", 4)
        assert e.position == 4 and 'position 4' in str(e)

    def test_resource_error_fields(self):
        e = ResourceExceededError('simplices', 11, 10)
        assert (e.count, e.limit) == (11, 10)
        assert e.exit_code == 2
