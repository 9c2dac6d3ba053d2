# projcodes test suite
