#!/usr/bin/env python
import sys
from subprocess import PIPE, Popen


def run(*argv):
    args = [sys.executable, "-m", "qextremal.main"] + list(argv)
    p = Popen(args, env={"PYTHONPATH": ":".join(sys.path)}, stdout=PIPE, stderr=PIPE)
    stdout, stderr = p.communicate()
    return p.returncode, stdout, stderr


def test_success():
    status, stdout, stderr = run("trees", "--t", "7", "--count", "--no-timestamp")

    assert status == 0
    assert stdout.splitlines()[-1] == b"11"


def test_usage():
    status, stdout, stderr = run("frobnicate")

    assert status == 2
    assert b"unknown command" in stderr

    status, stdout, stderr = run()
    assert status == 2


def test_bad_input():
    status, stdout, stderr = run("spectra", "-g", "A?!")

    assert status == 2
    assert stderr.startswith(b"qextremal: error:")


def test_bad_option():
    status, stdout, stderr = run("trees", "--frobnicate")

    assert status == 2
