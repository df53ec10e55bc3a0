import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import braids, open_books
from planar_sl.model import (
    BoundaryTwist,
    BraidLetter,
    BraidWord,
    MonodromyLetter,
    OpenBook,
    PairTwist,
    Rho,
    Sigma,
    ValidationError,
)
from planar_sl.parsing import (
    ParseError,
    format_braid,
    format_instance,
    format_open_book,
    parse_braid,
    parse_instance,
    parse_open_book,
)


class TestOpenBook:
    def test_application_order(self):
        ob = parse_open_book("r=3; A2^2 A{2,3}^-1")
        assert ob == OpenBook(3, (
            MonodromyLetter(PairTwist(2, 3), -1),
            MonodromyLetter(BoundaryTwist(2), 2),
        ))

    def test_disk(self):
        assert parse_open_book("r=1;") == OpenBook(1, ())

    def test_comments_and_whitespace(self):
        text = "# the pair of pants\nr = 3 ;\n  A{2,3}   # one twist\n A3^-2\n"
        ob = parse_open_book(text)
        assert ob.written == (MonodromyLetter(PairTwist(2, 3)), MonodromyLetter(BoundaryTwist(3), -2))

    @pytest.mark.parametrize("text", ["r=2; A{2,3}", "r=4; A5", "r=4; A{3,2}", "r=3; A0"])
    def test_index_out_of_range(self, text):
        with pytest.raises(ValidationError):
            parse_open_book(text)

    def test_zero_exponent(self):
        with pytest.raises(ValidationError, match="zero exponent"):
            parse_open_book("r=2; A2^0")

    @pytest.mark.parametrize("text", ["", "r=;", "r=2 A2", "r=2; B2", "r=2; A2^", "r=3; A2A3", "r=3; A{2,3"])
    def test_syntax_errors(self, text):
        with pytest.raises(ParseError):
            parse_open_book(text)

    def test_error_position(self):
        with pytest.raises(ParseError) as info:
            parse_open_book("r=3;\n  A2 Q7")
        assert (info.value.line, info.value.column) == (2, 6)

    def test_disk_rejects_twists(self):
        with pytest.raises(ValidationError):
            OpenBook(1, (MonodromyLetter(BoundaryTwist(2)),))


class TestFullTwist:
    def test_disk(self):
        assert parse_open_book("r=1; A1^5") == OpenBook(1)

    def test_annulus(self):
        assert parse_open_book("r=2; A1") == parse_open_book("r=2; A2")

    def test_pants(self):
        assert parse_open_book("r=3; A1^2") == parse_open_book("r=3; A{2,3} A{2,3}")

    def test_four_holes_lantern(self):
        ob = parse_open_book("r=4; A1")
        assert ob.written == parse_open_book("r=4; A{2,3} A{2,4} A{3,4} A2^-1 A3^-1 A4^-1").written

    def test_negative_power_is_inverse_word(self):
        word = parse_open_book("r=4; A1^-1").written
        assert word == tuple(
            MonodromyLetter(l.twist, -l.exponent) for l in reversed(parse_open_book("r=4; A1").written)
        )


class TestBraid:
    def test_sigma(self):
        assert parse_braid("n=2; s1^3", 1) == BraidWord(2, (BraidLetter(Sigma(1), 3),))

    def test_rho(self):
        assert parse_braid("n=1; r2^2", 2) == BraidWord(1, (BraidLetter(Rho(2), 2),))

    def test_written_order(self):
        b = parse_braid("n=3; s2 r2^-1 s1", 2)
        assert [str(l) for l in b.letters] == ["s2", "r2^-1", "s1"]

    @pytest.mark.parametrize("text,r", [("n=2; s2", 1), ("n=2; s0", 1), ("n=1; r2", 1), ("n=1; r3", 2)])
    def test_index_errors(self, text, r):
        with pytest.raises(ValidationError):
            parse_braid(text, r)

    def test_syntax(self):
        with pytest.raises(ParseError):
            parse_braid("n=2; t1", 2)


class TestInstance:
    def test_parse(self):
        inst = parse_instance("r=2; A2^2\n---\nn=1; r2^2\n")
        assert inst.open_book.r == 2 and inst.braid.n == 1

    def test_missing_separator(self):
        with pytest.raises(ParseError):
            parse_instance("r=2; A2^2\nn=1; r2^2\n")

    def test_braid_error_line_numbers(self):
        with pytest.raises(ParseError) as info:
            parse_instance("r=2;\n---\nn=1;\n r2 x\n")
        assert info.value.line == 4

    def test_rho_checked_against_open_book(self):
        with pytest.raises(ValidationError):
            parse_instance("r=2;\n---\nn=1; r3\n")


@given(open_books())
def test_open_book_round_trip(ob):
    assert parse_open_book(format_open_book(ob)) == ob


@given(st.integers(1, 6).flatmap(lambda r: st.tuples(st.just(r), braids(r))))
def test_braid_round_trip(rb):
    r, b = rb
    assert parse_braid(format_braid(b), r) == b


@given(open_books().flatmap(lambda ob: st.tuples(st.just(ob), braids(ob.r))))
def test_instance_round_trip(pair):
    ob, b = pair
    inst = parse_instance(format_instance(parse_instance(f"{format_open_book(ob)}\n---\n{format_braid(b)}")))
    assert inst.open_book == ob and inst.braid == b
