import io
import subprocess
import sys

import pytest

from repetend import census, cipher, expansion, keystream, numtheory
from repetend.cli import run


def run_cli(*argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize(
    "fraction, expected",
    [("1/7", "0.(142857)\n"), ("4/9", "0.(4)\n"), ("1/6", "0.1(6)\n"), ("1/2", "0.5\n"), ("22/7", "3.(142857)\n"), ("3/9", "0.(3)\n"), ("8/4", "2\n")],
)
def test_expand(fraction, expected):
    assert run_cli("expand", fraction) == (0, expected, "")
    assert run_cli("expand", fraction, "--verify") == (0, expected, "")


@pytest.mark.parametrize("argv", [("expand", "1/0"), ("expand", "-1/3"), ("expand", "1/-3"), ("expand", "1/503", "--max-digits", "10"), ("period", "0"), ("census", "--max", "2"), ("coprimes", "--max", "1"), ("odd-analysis", "--odd", "4", "--multipliers", "2")])
def test_domain_errors_exit_1(argv):
    code, out, err = run_cli(*argv)
    assert code == 1
    assert out == ""
    assert err.startswith("repetend: error:") and err.count("\n") == 1


@pytest.mark.parametrize("argv", [(), ("bogus",), ("expand",), ("expand", "1.5"), ("expand", "1/7", "--wat"), ("census",), ("period", "seven"), ("encrypt", "--key", "k", "--in", "a", "--text", "b")])
def test_usage_errors_exit_2(argv):
    code, out, err = run_cli(*argv)
    assert code == 2
    assert "usage error" in err


def test_period():
    code, out, _ = run_cli("period", "7")
    assert code == 0
    assert out == "period=6\nfactors=7\nphi=6\nprime=yes\nfull_reptend_prime=yes\n"
    assert run_cli("period", "2431")[1].splitlines()[:2] == ["period=48", "factors=11 * 13 * 17"]
    assert run_cli("period", "1")[1] == "period=0\nphi=1\nprime=no\nfull_reptend_prime=no\n"


def test_census_csv_and_table():
    code, out, _ = run_cli("census", "--max", "10")
    assert code == 0
    assert out == "denominator,count\n3,2\n7,6\n9,6\nTOTAL,14\n"
    code, out, _ = run_cli("census", "--max", "10", "--format", "table")
    assert out.splitlines()[-1].split() == ["TOTAL", "14"]


def test_coprimes():
    assert run_cli("coprimes", "--max", "4") == (0, "max=4\ncoprime_pairs=5\nprimes=2\n", "")
    assert run_cli("coprimes", "--max", "9", "--odd-only")[1] == "max=9\nodd_coprime_pairs=9\nprimes=4\n"


def test_odd_analysis():
    code, out, _ = run_cli("odd-analysis", "--odd", "15", "--multipliers", "4")
    assert code == 0
    assert out == (
        "odd=15\nfirst_position=7\nmultiplier,position,value\n"
        "1,22,45\n2,37,75\n3,52,105\n4,67,135\n"
        "window_coprimes=8\nprime_rule=14 (disagrees)\n"
    )
    out = run_cli("odd-analysis", "--odd", "3", "--multipliers", "2")[1]
    assert "window_coprimes=2\nprime_rule=2 (agrees)\n" in out


def test_keygen_stdout_and_file(tmp_path):
    code, out, _ = run_cli("keygen", "--min-period", "6")
    assert (code, out) == (0, "REPETEND-KEY v1\nnumerator=1\ndenominator=7\noffset=0\n")
    path = tmp_path / "k.key"
    assert run_cli("keygen", "--min-period", "500", "--primes-only", "--seed", "10", "--out", str(path)) == (0, "", "")
    assert path.read_bytes() == b"REPETEND-KEY v1\nnumerator=10\ndenominator=503\noffset=0\n"


def test_keygen_default_period_is_500():
    code, out, _ = run_cli("keygen")
    assert keystream.parse_key(out).denominator == 503


def test_encrypt_decrypt(tmp_path, monkeypatch):
    key = tmp_path / "k.key"
    key.write_text("REPETEND-KEY v1\nnumerator=1\ndenominator=7\noffset=0\n")
    assert run_cli("encrypt", "--key", str(key), "--text", "ATTACK") == (0, "BXVIHR\n", "")
    assert run_cli("decrypt", "--key", str(key), "--text", "BXVIHR") == (0, "ATTACK\n", "")
    msg = tmp_path / "msg.txt"
    msg.write_text("AT TACK\n")
    assert run_cli("encrypt", "--key", str(key), "--in", str(msg))[1] == "BX VIHR\n"
    assert run_cli("decrypt", "--key", str(key), stdin="BX VIHR\n", monkeypatch=monkeypatch)[1] == "AT TACK\n"


def test_crypt_errors(tmp_path):
    key = tmp_path / "k.key"
    key.write_text("REPETEND-KEY v1\nnumerator=3\ndenominator=9\noffset=0\n")
    assert run_cli("encrypt", "--key", str(key), "--text", "HI")[0] == 1
    key.write_text("REPETEND-KEY v1\nnumerator=1\ndenominator=7\n")
    assert run_cli("encrypt", "--key", str(key), "--text", "HI")[0] == 1
    assert run_cli("encrypt", "--key", str(tmp_path / "missing"), "--text", "HI")[0] == 1
    key.write_text("REPETEND-KEY v1\nnumerator=1\ndenominator=7\noffset=0\n")
    assert run_cli("encrypt", "--key", str(key), "--text", "café")[0] == 1


ALL_INVOCATIONS = [
    ["expand", "1/7", "--verify"],
    ["period", "2431"],
    ["keygen", "--min-period", "500"],
    ["census", "--max", "10"],
    ["coprimes", "--max", "20", "--odd-only"],
    ["odd-analysis", "--odd", "15", "--multipliers", "4"],
]


def test_determinism():
    for argv in ALL_INVOCATIONS:
        assert run_cli(*argv) == run_cli(*argv)


OPERATIONS = [
    numtheory.gcd, numtheory.mod_pow, numtheory.is_prime, numtheory.factorize,
    numtheory.euler_phi, numtheory.multiplicative_order, numtheory.is_full_reptend_prime,
    numtheory.find_denominator_with_min_order,
    expansion.make_rational, expansion.expand, expansion.period_length,
    expansion.digit_stream, expansion.reconstruct,
    keystream.generate_key, keystream.keystream_digits,
    cipher.encrypt, cipher.decrypt,
    census.repetend_census, census.count_coprime_pairs, census.coprime_count_in_odd_window,
    census.odd_at, census.first_position, census.odd_multiple_positions,
]


def test_every_operation_reachable(tmp_path):
    called = set()

    def profiler(frame, event, arg):
        if event == "call":
            called.add(frame.f_code)

    key = tmp_path / "k.key"
    invocations = ALL_INVOCATIONS + [
        ["keygen", "--min-period", "6", "--out", str(key)],
        ["encrypt", "--key", str(key), "--text", "HELLO"],
        ["decrypt", "--key", str(key), "--text", "IIN"],
    ]
    sys.setprofile(profiler)
    try:
        for argv in invocations:
            assert run_cli(*argv)[0] == 0
    finally:
        sys.setprofile(None)
    missing = [f.__qualname__ for f in OPERATIONS if f.__code__ not in called]
    assert missing == []


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-c", "import sys; from repetend.cli import main; sys.argv=['repetend','expand','1/7']; main()"],
        capture_output=True, text=True,
    )
    assert (proc.returncode, proc.stdout) == (0, "0.(142857)\n")
    proc = subprocess.run(
        [sys.executable, "-c", "import sys; from repetend.cli import main; sys.argv=['repetend','nope']; main()"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 2
