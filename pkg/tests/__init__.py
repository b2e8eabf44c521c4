# Tests for regtool
