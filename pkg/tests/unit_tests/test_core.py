import json
import time

import pytest

from ordwqo import Config, Workbench, workbench
from ordwqo.report import Report, SuiteReport
from ordwqo.utils.error import ParamError, ParseError
from ordwqo.utils.time import time_cal


def test_time_cal():
    func_name = "test_time_cal"

    def log_time_func(fname, delta_time):
        assert fname == func_name
        assert delta_time > 0.1

    workbench.init(Config(log_time_func=log_time_func))

    def time_cal_without_annotation():
        time.sleep(0.2)

    time_cal(time_cal_without_annotation, func_name=func_name, report_name="sleep")()
    assert workbench.report.op("sleep").count == 1
    assert workbench.report.op("sleep").total_time > 0.1

    workbench.init()

    def failing():
        raise ValueError("boom")

    with pytest.raises(ValueError):
        time_cal(failing, func_name=func_name, report_name="fail")()
    assert workbench.report.op("fail").count == 1

    workbench.init()


def test_config():
    config = Config()
    assert config.max_degree == 2
    assert config.seed == 2024
    with pytest.raises(ParamError):
        Config(max_degree=-1)
    with pytest.raises(ParamError):
        Config(enum_budget=0)
    with pytest.raises(ParamError):
        Config(random_cases=-5)


def test_report():
    report = Report()
    report.record("qo", 1)
    report.record("qo", 3)
    assert report.average_time("qo") == 2
    assert report.op("theta").average() == 0

    suite = SuiteReport("unittest", max_violations=1)
    suite.case(True)
    suite.case(False, "first")
    suite.case(False, "second")
    suite.wall_time = 0.5
    assert not suite.passed
    assert suite.violation_count == 2
    assert suite.violations == ["first"]
    report.add_suite(suite)
    assert report.violation_count == 2

    data = json.loads(report.to_json())
    assert data["violation_count"] == 2
    assert data["suites"][0]["cases"] == 3
    assert "wall_time" not in data["suites"][0]
    assert json.loads(report.to_json(timing=True))["suites"][0]["wall_time"] == 0.5


def test_init_from_config(tmp_path):
    path = tmp_path / "ordwqo.yml"
    path.write_text("config:\n    random_cases: 50\n    seed: 7\n", encoding="utf-8")
    bench = Workbench()
    conf = bench.init_from_config(str(path))
    assert conf["config"]["seed"] == 7
    assert bench.has_init
    assert bench.config.random_cases == 50
    assert bench.config.max_degree == 2

    bad = tmp_path / "bad.yml"
    bad.write_text("config:\n    unknown_option: 1\n", encoding="utf-8")
    with pytest.raises(ParamError):
        bench.init_from_config(str(bad))

    broken = tmp_path / "broken.yml"
    broken.write_text("config: [1, 2\n", encoding="utf-8")
    with pytest.raises(ParseError):
        bench.init_from_config(str(broken))

    assert bench.init_from_config(None) == {}
