from hypothesis import HealthCheck, settings

# automata construction time varies with the drawn language; keep runs reproducible
settings.register_profile(
    "altcodes", deadline=None, derandomize=True, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("altcodes")

ACCEPTANCE: dict = {}  # criterion number -> (passed, summary)


def pytest_runtest_makereport(item, call):
    number = getattr(item.function, "criterion", None)
    if number is None or call.when != "call":
        return
    detail = item.function.__doc__.strip().splitlines()[0]
    measured = getattr(item.module, "MEASURED", {}).get(number)
    if measured:
        detail = f"{detail} [{measured}]"
    if call.excinfo is not None:
        detail = f"{detail} -- {call.excinfo.typename}: {str(call.excinfo.value).splitlines()[0][:160]}"
    ACCEPTANCE[number] = (call.excinfo is None, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if passed else 'FAIL'}  {detail}")
