def pytest_runtest_logreport(report):
    # acceptance tests label themselves via record_property("criterion", ...);
    # printing from this hook bypasses output capture, so the one-line
    # verdicts always reach the terminal
    if report.when != "call":
        return
    for name, value in report.user_properties:
        if name == "criterion":
            status = "PASS" if report.passed else "FAIL"
            print(f"\nacceptance {value}: {status}")
