# keeps the tests directory on sys.path so the suites can share helpers
