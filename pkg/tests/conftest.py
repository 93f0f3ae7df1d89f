_acceptance = {}


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "acceptance" not in props:
        return
    number, title = props["acceptance"]
    ok = _acceptance.get(number, (title, True))[1]
    if report.when == "call" or report.failed:
        ok = ok and not report.failed
    _acceptance[number] = (title, ok)


def pytest_collection_modifyitems(items):
    for item in items:
        marker = item.get_closest_marker("acceptance")
        if marker is not None:
            item.user_properties.append(("acceptance", tuple(marker.args)))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        title, ok = _acceptance[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  [{number}] {title}")
