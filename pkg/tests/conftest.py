from hypothesis import settings

settings.register_profile("fincond", max_examples=200, deadline=None)
settings.load_profile("fincond")

_criteria = []


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for key, value in report.user_properties:
        if key == "criterion":
            _criteria.append((value, report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok in sorted(_criteria, key=lambda c: int(c[0].split(":")[0])):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {label}")
