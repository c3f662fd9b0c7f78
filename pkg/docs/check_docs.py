#!/usr/bin/env python
"""Build the qextremal docs and check the API pages"""

import os
from os import path
from subprocess import PIPE, STDOUT, Popen

SOURCE = path.join(path.dirname(path.abspath(__file__)), "source")


def sphinx(builder, tmpdir):
    p = Popen([
        "sphinx-build", "-W", "-b" + builder,
        "-d", str(tmpdir.join("doctrees")), SOURCE, str(tmpdir.join(builder))
    ], stdout=PIPE, stderr=STDOUT)
    stdout, _ = p.communicate()
    return p.returncode, stdout.decode("utf-8", "replace")


def modules(package):
    """Yield the dotted name of every module under *package*"""

    top = path.dirname(package)
    for root, _, files in os.walk(package):
        for name in files:
            if not name.endswith(".py") or name == "version.py":
                continue
            module = path.relpath(path.join(root, name), top)[:-len(".py")].replace(path.sep, ".")
            if module.endswith(".__init__"):
                module = module[:-len(".__init__")]
            yield module


def test_build_docs(tmpdir):
    status, output = sphinx("html", tmpdir)
    assert status == 0, output


def test_api_pages():
    import qextremal

    pages = set(name[:-len(".rst")] for name in os.listdir(path.join(SOURCE, "api")) if name.startswith("qextremal"))

    for module in modules(path.dirname(qextremal.__file__)):
        assert module in pages, module
