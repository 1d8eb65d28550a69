from hypothesis import given, settings, strategies as st
import numpy as np
import pytest

from madfc import DomainError, LabelFormat, ParseError, ScaleKind, scale_inverse
from madfc.ticks import format_label, generate_ticks, label_tolerance, nice_ticks, parse_label


class TestFormatLabel:
    @pytest.mark.parametrize("x, fmt, expected", [
        (2, "fraction", "2"),
        (1 / 3, "fraction", "1/3"),
        (1 / 3, "decimal", "0.33"),
        (1 / 3, "exponent", "3^-1"),
        (1, "decimal", "1"),
        (2.5, "exponent", "2.5"),
        (0.25, "fraction", "1/4"),
        (0.75, "fraction", "3/4"),
        (0.75, "exponent", "(4/3)^-1"),
        (1 / 1024, "decimal", "0.00098"),
        (0.5, "decimal", "0.5"),
    ])
    def test_examples(self, x, fmt, expected):
        assert format_label(x, fmt) == expected

    @pytest.mark.parametrize("fmt", list(LabelFormat))
    @pytest.mark.parametrize("x", [1.0, 2.0, 7.25, 100.0, 1e6])
    def test_positive_side_identical_across_formats(self, fmt, x):
        assert format_label(x, fmt) == format_label(x, LabelFormat.FRACTION)

    def test_decimal_digits_configurable(self):
        assert format_label(1 / 3, "decimal", decimal_digits=4) == "0.3333"

    @pytest.mark.parametrize("bad", [0, -1, float("nan")])
    def test_domain(self, bad):
        with pytest.raises(DomainError):
            format_label(bad, "fraction")


class TestParseLabel:
    @pytest.mark.parametrize("text, expected", [
        ("1/4", 0.25), ("3^-1", 1 / 3), ("2", 2.0), ("0.33", 0.33), ("(4/3)^-1", 0.75),
        ("2.5", 2.5),
    ])
    def test_examples(self, text, expected):
        assert parse_label(text) == pytest.approx(expected, rel=1e-15)

    @pytest.mark.parametrize("bad", ["", "abc", "1/0", "-2", "0", "2^-2", "1//3", "nan", "0^-1"])
    def test_rejects(self, bad):
        with pytest.raises(ParseError):
            parse_label(bad)

    @pytest.mark.parametrize("fmt", list(LabelFormat))
    @given(x=st.floats(1e-5, 1e5))
    def test_round_trip_within_printed_precision(self, fmt, x):
        assert abs(parse_label(format_label(x, fmt)) - x) <= label_tolerance(x, fmt)


class TestGenerateTicks:
    def test_madfc_example(self):
        ticks = generate_ticks("madfc", 1 / 4, 4, 7)
        assert ticks.positions == (-3, -2, -1, 0, 1, 2, 3)
        assert ticks.labels == ("1/4", "1/3", "1/2", "1", "2", "3", "4")
        assert ticks.format is LabelFormat.FRACTION and ticks.scale is ScaleKind.MADFC

    def test_log2_example(self):
        ticks = generate_ticks("log2", 1 / 8, 8, 7)
        assert ticks.positions == (-3, -2, -1, 0, 1, 2, 3)
        assert ticks.labels == ("1/8", "1/4", "1/2", "1", "2", "4", "8")

    def test_linear_example(self):
        ticks = generate_ticks("linear", 1, 6, 6)
        assert ticks.positions == (1, 2, 3, 4, 5, 6)
        assert ticks.labels == ("1", "2", "3", "4", "5", "6")

    def test_exponent_labels(self):
        ticks = generate_ticks("madfc", 1 / 4, 4, 7, "exponent")
        assert ticks.labels[:3] == ("4^-1", "3^-1", "2^-1")

    def test_step_widens(self):
        ticks = generate_ticks("madfc", 1 / 9, 9, 7)
        steps = set(np.diff(ticks.positions))
        assert steps == {5.0} and len(ticks) <= 7
        assert ticks.positions[0] <= -8 and ticks.positions[-1] >= 8

    @pytest.mark.parametrize("scale", list(ScaleKind))
    def test_single_reference_tick(self, scale):
        for lo, hi in [(0.1, 20), (0.3, 1.7), (1 / 50, 3), (0.9, 1000)]:
            ticks = generate_ticks(scale, lo, hi, 7)
            ref = 1.0 if scale is ScaleKind.LINEAR else 0.0
            assert sum(p == ref for p in ticks.positions) == 1

    @pytest.mark.parametrize("scale", ["madfc", "log2"])
    def test_symmetric_range_gives_reciprocal_labels(self, scale):
        ticks = generate_ticks(scale, 1 / 6, 6, 9)
        pos = np.array(ticks.positions)
        np.testing.assert_array_equal(pos, -pos[::-1])
        vals = [parse_label(s) for s in ticks.labels]
        for a, b in zip(vals, vals[::-1]):
            assert a * b == pytest.approx(1.0, rel=1e-12)

    def test_deterministic(self):
        a = generate_ticks("madfc", 0.013, 77.0, 9, "decimal")
        b = generate_ticks("madfc", 0.013, 77.0, 9, "decimal")
        assert a == b and repr(a) == repr(b)

    @pytest.mark.parametrize("args", [
        ("madfc", 2, 1, 7), ("madfc", 0, 2, 7), ("madfc", 1, 1, 7), ("madfc", 0.5, 2, 2),
    ])
    def test_invalid(self, args):
        with pytest.raises(DomainError):
            generate_ticks(*args)

    @settings(max_examples=200)
    @given(scale=st.sampled_from(list(ScaleKind)), fmt=st.sampled_from(list(LabelFormat)),
           lo=st.floats(-8, 2), span=st.floats(0.05, 10), count=st.integers(3, 12))
    def test_readability(self, scale, fmt, lo, span, count):
        fc_min, fc_max = 2.0 ** lo, 2.0 ** (lo + span)
        ticks = generate_ticks(scale, fc_min, fc_max, count, fmt)
        assert len(ticks) >= 2
        for pos, label in ticks:
            expected = scale_inverse(scale, pos)
            assert abs(parse_label(label) - expected) <= label_tolerance(expected, fmt)


class TestNiceTicks:
    def test_basic(self):
        assert nice_ticks(0, 10, 6) == [0, 2, 4, 6, 8, 10]

    def test_fractional_steps_are_clean(self):
        assert nice_ticks(0.1, 0.55, 6) == [0.1, 0.2, 0.3, 0.4, 0.5, 0.6]

    def test_covers_range(self):
        ticks = nice_ticks(3.7, 91.2, 8)
        assert ticks[0] <= 3.7 and ticks[-1] >= 91.2 and len(ticks) <= 8


@pytest.mark.parametrize("x", [0.0318, 0.03179, 0.7531, 0.999, 0.0011])
@pytest.mark.parametrize("fmt", ["fraction", "exponent"])
def test_tolerance_covers_coarse_fractions(x, fmt):
    assert abs(parse_label(format_label(x, fmt)) - x) <= label_tolerance(x, fmt)
