import io
import subprocess
import sys

from nlp2dlp.cli import main

CLOSING = "p. q. r v (p, q).\n"


def run_cli(args, stdin=""):
    proc = subprocess.run(
        [sys.executable, "-m", "nlp2dlp", *args],
        input=stdin, capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def call_main(args, stdin, capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_translate_then_solve_pipe():
    code, dlv, err = run_cli(["translate", "--mode", "structural"], CLOSING)
    assert code == 0
    assert "mode=structural" in err and "labels_created=" in err
    code, out, _ = run_cli(["solve", "--project", "p,q,r"], dlv)
    assert code == 0
    assert out == "{p, q}\n"


def test_solve_empty_program_prints_empty_set(capsys, monkeypatch):
    code, out, _ = call_main(["solve"], "", capsys, monkeypatch)
    assert code == 0
    assert out == "{}\n"


def test_solve_reports_zero_answer_sets(capsys, monkeypatch):
    code, out, _ = call_main(["solve"], "p. :- p.", capsys, monkeypatch)
    assert code == 0
    assert out == "0 answer sets\n"


def test_solve_alphabet_extension(capsys, monkeypatch):
    code, out, _ = call_main(["solve", "--alphabet", "p,q"], "p.",
                             capsys, monkeypatch)
    assert code == 0
    assert out == "{p}\n"


def test_check_faithful_structural_ok(capsys, monkeypatch):
    code, out, _ = call_main(["check", "faithful"], CLOSING,
                             capsys, monkeypatch)
    assert code == 0
    assert out == "faithful: yes\n"


def test_check_faithful_polarity_fails_with_witness(capsys, monkeypatch):
    code, out, _ = call_main(["check", "faithful", "--mode", "polarity"],
                             CLOSING, capsys, monkeypatch)
    assert code == 1
    assert "faithful: no" in out
    assert "witness: {p, q, r}" in out


def test_check_strong(capsys, monkeypatch):
    code, out, _ = call_main(
        ["check", "strong", "--contexts", "5", "--seed", "1"],
        "p :- not q.", capsys, monkeypatch)
    assert code == 0
    assert out.count(": ok") == 5


def test_check_modular(tmp_path, capsys, monkeypatch):
    second = tmp_path / "second.lp"
    second.write_text("q :- not p.\n")
    code, out, _ = call_main(["check", "modular", "-j", str(second)],
                             "p :- not q.", capsys, monkeypatch)
    assert code == 0
    assert out == "modular: yes\n"


def test_check_modular_requires_second_file(capsys, monkeypatch):
    code, _, err = call_main(["check", "modular"], "p.", capsys, monkeypatch)
    assert code == 2
    assert "requires -j" in err


def test_check_props(capsys, monkeypatch):
    code, out, _ = call_main(["check", "props"], CLOSING, capsys, monkeypatch)
    assert code == 0
    assert "yes" in out


def test_gen_is_deterministic_and_parseable():
    code1, out1, _ = run_cli(["gen", "--seed", "42"])
    code2, out2, _ = run_cli(["gen", "--seed", "42"])
    assert code1 == code2 == 0
    assert out1 == out2
    from nlp2dlp import parse
    parse(out1)


def test_stats_csv(capsys, monkeypatch):
    code, out, _ = call_main(["stats", "--family", "dnf_head",
                              "--n-max", "3"], "", capsys, monkeypatch)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,structural_size,distributive_size,distributive_overflow"
    assert len(lines) == 4


def test_parse_error_exits_2(capsys, monkeypatch):
    code, _, err = call_main(["solve"], "p :- ?", capsys, monkeypatch)
    assert code == 2
    assert "error" in err


def test_reserved_prefix_exits_2(capsys, monkeypatch):
    code, _, err = call_main(["translate"], "n_p :- q.", capsys, monkeypatch)
    assert code == 2
    assert "reserved prefix" in err


def test_cap_exceeded_exits_3(capsys, monkeypatch):
    atoms = ",".join(f"x{i}" for i in range(25))
    code, _, err = call_main(["solve", "--alphabet", atoms], "p.",
                             capsys, monkeypatch)
    assert code == 3
    assert "resource error" in err


def test_distributive_guard_exits_3(tmp_path, capsys, monkeypatch):
    from nlp2dlp import family_program, print_nested
    text = print_nested(family_program("dnf_head", 20))
    code, _, err = call_main(["translate", "--mode", "distributive"],
                             text, capsys, monkeypatch)
    assert code == 3
    assert "resource error" in err


def test_unknown_flag_exits_2():
    code, _, err = run_cli(["solve", "--bogus"])
    assert code == 2


def test_translate_file_io(tmp_path):
    src = tmp_path / "in.lp"
    dst = tmp_path / "out.lp"
    src.write_text("not q :- r.\n")
    code, out, _ = run_cli(["translate", "-i", str(src), "-o", str(dst)])
    assert code == 0 and out == ""
    text = dst.read_text()
    assert ":- q, n_q." in text and "n_q :- not q." in text
