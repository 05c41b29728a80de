import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--run-digits10m", action="store_true", default=False,
        help="run the ten-million-digit spigot checks (takes hours)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-digits10m"):
        return
    skip = pytest.mark.skip(reason="pass --run-digits10m to enable")
    for item in items:
        if "digits10m" in item.keywords:
            item.add_marker(skip)
