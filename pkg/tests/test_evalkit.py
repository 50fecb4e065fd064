"""Study instruments: SUS scoring, rubric, agreement, length screen, U test.

Mann-Whitney anchors below were worked out by hand on the doubled-midrank
arithmetic and cross-checked against the subset-enumeration oracle before
being frozen here.  The random sweeps compare the dynamic-programming exact
path against that oracle case by case.
"""

import math
import random
import textwrap

import pytest
from hypothesis import given
from hypothesis import strategies as st

from impactcard import (
    EMAIL_WORDS_MAX,
    EMAIL_WORDS_MIN,
    EXACT_LIMIT,
    LengthFinding,
    RubricAssessment,
    SusResponse,
    email_length_check,
    inter_rater_agreement,
    mann_whitney_exact,
    read_rubric_csv,
    read_sus_csv,
    read_values_csv,
    rubric_overall,
    sus_score,
)
from oracles import mwu_oracle, normal_sf

answers = st.integers(min_value=1, max_value=5)


class TestSusScore:
    @pytest.mark.parametrize(
        "items,expected",
        [
            ((5, 1, 5, 1, 5, 1, 5, 1, 5, 1), 100.0),
            ((1, 5, 1, 5, 1, 5, 1, 5, 1, 5), 0.0),
            ((3,) * 10, 50.0),
            ((4, 2, 4, 2, 4, 2, 4, 2, 4, 2), 75.0),
            ((4, 3, 2, 5, 4, 1, 3, 2, 5, 3), 60.0),
        ],
    )
    def test_anchors(self, items, expected):
        assert sus_score(SusResponse(items=items)) == expected

    def test_accepts_a_plain_sequence(self):
        assert sus_score([3] * 10) == 50.0

    @given(st.tuples(*[answers] * 10))
    def test_range_and_granularity(self, items):
        score = sus_score(items)
        assert 0.0 <= score <= 100.0
        assert (score / 2.5) == int(score / 2.5)

    @given(st.tuples(*[answers] * 10), st.integers(min_value=0, max_value=9))
    def test_single_answer_sensitivity(self, items, position):
        # one scale step moves the score by exactly 2.5, up for the positive
        # statements (odd positions) and down for the negative ones
        if items[position] == 5:
            items = items[:position] + (4,) + items[position + 1 :]
        bumped = items[:position] + (items[position] + 1,) + items[position + 1 :]
        delta = sus_score(bumped) - sus_score(items)
        assert delta == (2.5 if position % 2 == 0 else -2.5)

    @pytest.mark.parametrize("count", [0, 9, 11])
    def test_wrong_item_count_rejected(self, count):
        with pytest.raises(ValueError, match=f"10 items; got {count}"):
            SusResponse(items=(3,) * count)

    def test_out_of_scale_answers_rejected(self):
        with pytest.raises(ValueError, match="item 1"):
            SusResponse(items=(0,) + (3,) * 9)
        with pytest.raises(ValueError, match="item 10"):
            SusResponse(items=(3,) * 9 + (6,))

    def test_booleans_are_not_answers(self):
        with pytest.raises(ValueError, match="item 2"):
            SusResponse(items=(3, True, 3, 3, 3, 3, 3, 3, 3, 3))


class TestRubric:
    def test_overall_is_the_weakest_criterion(self):
        assessment = RubricAssessment(
            context=5, recommendation=4, risks=3, mitigations=2, clarity=5
        )
        assert rubric_overall(assessment) == 2
        assert assessment.scores() == (5, 4, 3, 2, 5)

    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    def test_uniform_scores(self, k):
        uniform = RubricAssessment(
            context=k, recommendation=k, risks=k, mitigations=k, clarity=k
        )
        assert rubric_overall(uniform) == k

    @given(st.tuples(*[answers] * 5))
    def test_overall_never_exceeds_any_criterion(self, scores):
        assessment = RubricAssessment(*scores)
        overall = rubric_overall(assessment)
        assert overall == min(scores)
        assert all(overall <= score for score in scores)

    def test_criterion_validation_names_the_field(self):
        with pytest.raises(ValueError, match="clarity"):
            RubricAssessment(context=3, recommendation=3, risks=3, mitigations=3, clarity=0)
        with pytest.raises(ValueError, match="risks"):
            RubricAssessment(context=3, recommendation=3, risks=True, mitigations=3, clarity=3)


class TestAgreement:
    def test_exact_match_fraction(self):
        first = [3] * 17 + [1, 1, 1]
        second = [3] * 17 + [2, 2, 2]
        assert inter_rater_agreement(first, second) == 0.85

    def test_bounds(self):
        assert inter_rater_agreement([1, 2, 3], [1, 2, 3]) == 1.0
        assert inter_rater_agreement([1, 2, 3], [2, 3, 4]) == 0.0

    def test_length_mismatch(self):
        with pytest.raises(ValueError, match="length mismatch: 3 vs 2"):
            inter_rater_agreement([1, 2, 3], [1, 2])

    def test_empty_rejected(self):
        with pytest.raises(ValueError, match="at least one pair"):
            inter_rater_agreement([], [])


class TestEmailLength:
    def test_window_boundaries(self):
        assert email_length_check("word " * EMAIL_WORDS_MIN) is None
        assert email_length_check("word " * EMAIL_WORDS_MAX) is None

        short = email_length_check("word " * (EMAIL_WORDS_MIN - 1))
        assert isinstance(short, LengthFinding)
        assert (short.measured, short.low, short.high) == (49, 50, 250)
        assert "at least 50" in short.message

        long = email_length_check("word " * (EMAIL_WORDS_MAX + 1))
        assert long.measured == 251
        assert "at most 250" in long.message

    def test_counts_words_not_whitespace(self):
        text = "  one\n two\tthree  " + "pad " * 47
        assert email_length_check(text) is None


class TestMannWhitney:
    @pytest.mark.parametrize(
        "first,second,u,p",
        [
            ((1, 2, 3), (4, 5, 6), 0.0, 0.1),
            ((5,), (1, 2, 3), 0.0, 0.5),
            ((1, 1), (1, 1), 2.0, 1.0),
            ((1, 2), (3, 4), 0.0, 1 / 3),
            ((1, 2, 2), (2, 3, 3), 1.0, 0.3),
        ],
    )
    def test_exact_anchors(self, first, second, u, p):
        got_u, got_p = mann_whitney_exact(first, second)
        assert got_u == u
        assert abs(got_p - p) <= 1e-15

    def test_random_instances_match_the_enumeration_oracle(self):
        rng = random.Random(20260817)
        for _ in range(200):
            n1 = rng.randint(1, 5)
            n2 = rng.randint(1, 5)
            if rng.random() < 0.5:
                pool = lambda: float(rng.randint(0, 4))  # heavy ties
            else:
                pool = lambda: round(rng.uniform(-3, 3), 3)
            xs = [pool() for _ in range(n1)]
            ys = [pool() for _ in range(n2)]
            u, p = mann_whitney_exact(xs, ys)
            ou, op = mwu_oracle(xs, ys)
            assert u == ou, (xs, ys)
            assert abs(p - op) <= 1e-12, (xs, ys)

    def test_symmetry(self):
        rng = random.Random(7)
        for _ in range(50):
            xs = [rng.randint(0, 6) for _ in range(rng.randint(1, 6))]
            ys = [rng.randint(0, 6) for _ in range(rng.randint(1, 6))]
            assert mann_whitney_exact(xs, ys) == mann_whitney_exact(ys, xs)

    def test_large_samples_use_the_normal_approximation(self):
        # 22 values total; the doubled-midrank formulation must agree with a
        # straight transcription of the tie-corrected normal approximation
        xs = [1.0, 1.0, 2.0, 3.0, 3.0, 3.0, 4.0, 5.0, 6.0, 6.0, 7.0]
        ys = [2.0, 2.0, 3.0, 4.0, 4.0, 5.0, 6.0, 7.0, 7.0, 8.0, 9.0]
        u, p = mann_whitney_exact(xs, ys)

        pooled = sorted(xs + ys)
        ranks = {}
        i = 0
        while i < len(pooled):
            j = i
            while j + 1 < len(pooled) and pooled[j + 1] == pooled[i]:
                j += 1
            ranks[pooled[i]] = (i + j + 2) / 2
            i = j + 1
        r1 = sum(ranks[v] for v in xs)
        n1, n2 = len(xs), len(ys)
        total = n1 + n2
        u1 = r1 - n1 * (n1 + 1) / 2
        assert u == min(u1, n1 * n2 - u1)

        tie_sizes = [pooled.count(v) for v in set(pooled)]
        tie_term = sum(t**3 - t for t in tie_sizes)
        variance = n1 * n2 / 12 * ((total + 1) - tie_term / (total * (total - 1)))
        z = (abs(u1 - n1 * n2 / 2) - 0.5) / math.sqrt(variance)
        assert abs(p - 2 * normal_sf(max(z, 0.0))) <= 1e-12

    def test_separated_large_samples_have_tiny_p(self):
        xs = [float(v) for v in range(1, 12)]
        ys = [float(v) for v in range(100, 111)]
        u, p = mann_whitney_exact(xs, ys)
        assert u == 0.0
        assert 0.0 < p < 1e-3

    def test_degenerate_large_sample_is_inconclusive(self):
        u, p = mann_whitney_exact([7.0] * 11, [7.0] * 11)
        assert u == 60.5
        assert p == 1.0

    def test_method_switch_boundary(self):
        at_limit = list(range(10)), list(range(5, 15))
        assert len(at_limit[0]) + len(at_limit[1]) == EXACT_LIMIT
        exact_p = mann_whitney_exact(*at_limit)[1]
        over = list(range(10)), list(range(5, 16))
        approx_p = mann_whitney_exact(*over)[1]
        assert 0.0 < exact_p <= 1.0
        assert 0.0 < approx_p <= 1.0

    def test_input_validation(self):
        with pytest.raises(ValueError, match="at least one value"):
            mann_whitney_exact([], [1.0])
        with pytest.raises(ValueError, match="finite"):
            mann_whitney_exact([1.0, float("nan")], [2.0])
        with pytest.raises(ValueError, match="finite"):
            mann_whitney_exact([1.0], [float("inf")])


def write(path, text):
    path.write_text(textwrap.dedent(text), encoding="utf-8")
    return path


class TestSusCsv:
    def test_reads_rows_in_order(self, tmp_path):
        path = write(
            tmp_path / "sus.csv",
            """\
            id,item1,item2,item3,item4,item5,item6,item7,item8,item9,item10
            p1,5,1,5,1,5,1,5,1,5,1
            p2,3,3,3,3,3,3,3,3,3,3

            p3,4,2,4,2,4,2,4,2,4,2
            """,
        )
        rows = read_sus_csv(path)
        assert [identifier for identifier, _ in rows] == ["p1", "p2", "p3"]
        assert [sus_score(response) for _, response in rows] == [100.0, 50.0, 75.0]

    def test_bad_header(self, tmp_path):
        path = write(tmp_path / "sus.csv", "id,q1\np1,3\n")
        with pytest.raises(ValueError, match="bad header"):
            read_sus_csv(path)

    def test_empty_file(self, tmp_path):
        path = write(tmp_path / "sus.csv", "")
        with pytest.raises(ValueError, match="empty file"):
            read_sus_csv(path)

    def test_header_without_rows(self, tmp_path):
        path = write(
            tmp_path / "sus.csv",
            "id,item1,item2,item3,item4,item5,item6,item7,item8,item9,item10\n",
        )
        with pytest.raises(ValueError, match="no data rows"):
            read_sus_csv(path)

    def test_short_row_names_the_line(self, tmp_path):
        path = write(
            tmp_path / "sus.csv",
            """\
            id,item1,item2,item3,item4,item5,item6,item7,item8,item9,item10
            p1,5,1,5,1,5,1,5,1,5,1
            p2,3,3
            """,
        )
        with pytest.raises(ValueError, match="line 3: expected 11 columns, got 3"):
            read_sus_csv(path)

    def test_non_integer_cell(self, tmp_path):
        path = write(
            tmp_path / "sus.csv",
            """\
            id,item1,item2,item3,item4,item5,item6,item7,item8,item9,item10
            p1,5,x,5,1,5,1,5,1,5,1
            """,
        )
        with pytest.raises(ValueError, match="line 2: item2 must be an integer; got 'x'"):
            read_sus_csv(path)

    def test_out_of_scale_cell(self, tmp_path):
        path = write(
            tmp_path / "sus.csv",
            """\
            id,item1,item2,item3,item4,item5,item6,item7,item8,item9,item10
            p1,5,1,5,1,5,1,5,1,5,6
            """,
        )
        with pytest.raises(ValueError, match="line 2: item 10 must be an integer in 1..5"):
            read_sus_csv(path)


class TestRubricCsv:
    def test_reads_assessments(self, tmp_path):
        path = write(
            tmp_path / "rubric.csv",
            """\
            id,context,recommendation,risks,mitigations,clarity
            r1,5,4,3,2,5
            r2,4,4,4,4,4
            """,
        )
        rows = read_rubric_csv(path)
        assert [rubric_overall(assessment) for _, assessment in rows] == [2, 4]

    def test_out_of_scale_names_the_criterion(self, tmp_path):
        path = write(
            tmp_path / "rubric.csv",
            """\
            id,context,recommendation,risks,mitigations,clarity
            r1,5,4,3,2,9
            """,
        )
        with pytest.raises(ValueError, match="line 2: clarity must be an integer in 1..5"):
            read_rubric_csv(path)


class TestValuesCsv:
    def test_reads_floats(self, tmp_path):
        path = write(
            tmp_path / "values.csv",
            """\
            id,value
            a,1.5
            b,-2
            c,3e-1
            """,
        )
        assert read_values_csv(path) == [("a", 1.5), ("b", -2.0), ("c", 0.3)]

    def test_non_numeric_cell(self, tmp_path):
        path = write(tmp_path / "values.csv", "id,value\na,abc\n")
        with pytest.raises(ValueError, match="line 2: value must be a number; got 'abc'"):
            read_values_csv(path)

    @pytest.mark.parametrize("cell", ["nan", "inf", "-inf"])
    def test_non_finite_rejected(self, tmp_path, cell):
        path = write(tmp_path / "values.csv", f"id,value\na,{cell}\n")
        with pytest.raises(ValueError, match="must be finite"):
            read_values_csv(path)
