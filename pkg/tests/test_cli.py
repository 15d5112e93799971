import io
import json
import subprocess
import sys

import pytest

from selfsim.cli import build_parser, run

from cli_cases import cases, write_inputs


def call(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(scope="module")
def inputs(tmp_path_factory):
    return write_inputs(tmp_path_factory.mktemp("cli"))


def test_every_subcommand_has_a_case(inputs):
    sub = next(a for a in build_parser()._actions if a.dest == "command")
    covered = {argv[0] for argv in cases(inputs)}
    assert covered == set(sub.choices)


@pytest.mark.parametrize("k", range(23))
def test_case_succeeds_and_repeats(inputs, k):
    argv = cases(inputs)[k]
    code, out, err = call(argv)
    assert code == 0, err
    assert call(argv)[1] == out
    if "dot" not in argv:
        assert "caps" in json.loads(out)


def test_pcf_odometer_output():
    code, out, _ = call(["pcf", "gallery:odometer"])
    assert code == 0
    assert out == ('{"activity_degree":0,"bounded":true,"caps":{"max_iter":10000,"threads":1},'
                   '"postcritical":["^inf 0","^inf 1"]}\n')


def test_pretty_output():
    code, out, _ = call(["pcf", "gallery:odometer", "--pretty"])
    assert code == 0 and out.startswith("{\n  ")


def test_decide_verdicts(inputs):
    code, out, _ = call(["decide", "gallery:hanoi", inputs["p3"]])
    assert json.loads(out)["verdict"] == "tileable"


def test_missing_file_is_input_error():
    code, out, err = call(["pcf", "/nonexistent.json"])
    assert code == 2 and not out
    assert json.loads(err)["error"]


def test_cap_exit_code():
    code, _, err = call(["pcf", "gallery:longrange"])
    assert code == 3
    assert "caps" in json.loads(err)
    code, _, _ = call(["verify", "lr_sunny", "--extent", "9"])
    assert code == 3


def test_unknown_builtin():
    code, _, err = call(["gallery", "export", "nope"])
    assert code == 2 and json.loads(err)["error"] == "unknown_name"


def test_bad_ray(inputs):
    code, _, _ = call(["decide", "gallery:odometer", inputs["p2t"], "--ray", "{"])
    assert code == 2


def test_threads_do_not_change_output(inputs):
    argv = ["tile", "gallery:hanoi", inputs["p3"], "--level", "2"]
    a = json.loads(call(argv)[1])
    b = json.loads(call(argv + ["--threads", "4"])[1])
    a.pop("caps"), b.pop("caps")
    assert a == b


def test_console_help():
    out = subprocess.run([sys.executable, "-m", "selfsim.cli", "--help"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and "decide" in out.stdout
