import json
import math

import numpy as np
import pytest

from framekit import cli, io
from framekit.dilation import dilate
from framekit.errors import ParseError
from framekit.generate import GenKind, GenSpec, generate
from framekit.pasf import FramePair

from helpers import MERCEDES_T, identity_pair, line_pair, mercedes_pair


def write_pair(path, pair):
    io.write(path, io.pair_to_dict(pair))
    return str(path)


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, out


class TestRoundTrip:
    @pytest.mark.parametrize("pair", [identity_pair(), line_pair(), mercedes_pair(),
                                      FramePair(np.eye(2) / 3, np.eye(2) * 0.1, p=math.inf)])
    def test_pair_bytes(self, pair):
        text = io.dumps(io.pair_to_dict(pair))
        kind, back = io.loads(text)
        assert kind == "pair"
        assert io.dumps(io.pair_to_dict(back)) == text
        assert np.array_equal(back.vectors, pair.vectors)
        assert back.p == pair.p and back.q == pair.q

    def test_inf_written_as_string(self):
        doc = io.pair_to_dict(FramePair(np.eye(1), np.eye(1), p=math.inf))
        assert doc["p"] == "inf" and doc["q"] == "inf"

    @pytest.mark.parametrize("seed", range(5))
    def test_bundle_bytes(self, seed):
        pair = generate(GenSpec(3, 5, p=1.5, seed=seed))
        text = io.dumps(io.bundle_to_dict(dilate(pair)))
        kind, back = io.loads(text)
        assert kind == "bundle"
        assert io.dumps(io.bundle_to_dict(back)) == text

    def test_degenerate_bundle_bytes(self):
        with pytest.warns(Warning):
            bundle = dilate(identity_pair())
        text = io.dumps(io.bundle_to_dict(bundle))
        assert io.dumps(io.bundle_to_dict(io.loads(text)[1])) == text

    def test_bare_vectors_document(self):
        kind, pair = io.loads(json.dumps({"vectors": MERCEDES_T.tolist()}))
        assert kind == "pair" and pair.is_hilbert_style

    @pytest.mark.parametrize("text", [
        "{", "[]", '{"vectors": [[1, 2]], "functionals": [[1]], "space_dim": 1, "seq_dim": 2}',
        '{"space_dim": 1, "seq_dim": 1, "p": "two", "functionals": [[1]], "vectors": [[1]]}',
        '{"space_dim": 1, "seq_dim": 1, "p": 0.5, "functionals": [[1]], "vectors": [[1]]}',
        '{"base": {"vectors": [[1]]}, "omega": []}',
    ])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            io.loads(text)


class TestGen:
    def test_deterministic(self, tmp_path, capsys):
        outs = []
        for name in ("a.json", "b.json"):
            assert run(capsys, "gen", "-d", 3, "-n", 5, "--p", 1.5, "--seed", 9,
                       "--out", tmp_path / name)[0] == 0
            outs.append((tmp_path / name).read_bytes())
        assert outs[0] == outs[1]

    def test_stdout_and_kinds(self, capsys):
        code, out = run(capsys, "gen", "-d", 2, "--kind", "riesz", "--seed", 1)
        assert code == 0
        pair = io.loads(out)[1]
        assert pair.space_dim == pair.seq_dim == 2
        code, out = run(capsys, "gen", "-d", 2, "-n", 3, "--kind", "tight")
        assert np.array_equal(io.loads(out)[1].vectors, MERCEDES_T)

    def test_p_inf_flag(self, capsys):
        code, out = run(capsys, "gen", "-d", 2, "--p", "inf")
        assert code == 0 and json.loads(out)["p"] == "inf"

    def test_rejects_n_below_d(self, capsys):
        assert run(capsys, "gen", "-d", 3, "-n", 2)[0] == 2


class TestVerify:
    def test_identity(self, tmp_path, capsys):
        code, out = run(capsys, "verify", write_pair(tmp_path / "i.json", identity_pair()))
        assert code == 0 and json.loads(out)["overall"] is True

    def test_line_pair_not_riesz_is_not_failure(self, tmp_path, capsys):
        code, out = run(capsys, "verify", write_pair(tmp_path / "l.json", line_pair()))
        report = json.loads(out)
        assert code == 0
        # S = [1], so the pair is a Schauder frame, the p-ASF case with S = I
        assert report["info"]["kind"] == "SCHAUDER_FRAME"
        assert report["info"]["p_approximate_riesz"] is False

    def test_not_pasf(self, tmp_path, capsys):
        path = write_pair(tmp_path / "z.json", FramePair(np.zeros((3, 2)), np.zeros((2, 3))))
        assert run(capsys, "verify", path)[0] == 1

    def test_corrupt_and_missing(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text('{"space_dim": 2, "seq_')
        assert run(capsys, "verify", bad)[0] == 2
        assert run(capsys, "verify", tmp_path / "missing.json")[0] == 2

    def test_tolerance_from_environment(self, tmp_path, capsys, monkeypatch):
        path = write_pair(tmp_path / "m.json", mercedes_pair())
        monkeypatch.setenv("FRAMEKIT_TOLERANCE", "1e-30")
        assert run(capsys, "verify", path)[0] == 1
        monkeypatch.setenv("FRAMEKIT_TOLERANCE", "1e-8")
        assert run(capsys, "verify", path)[0] == 0
        assert run(capsys, "verify", path, "--tolerance", "1e-30")[0] == 1


class TestDilate:
    def test_mercedes(self, tmp_path, capsys):
        out_path = tmp_path / "bundle.json"
        code, out = run(capsys, "dilate", write_pair(tmp_path / "m.json", mercedes_pair()),
                        "--out", out_path)
        report = json.loads(out)
        assert code == 0
        assert max(c["defect"] for c in report["checks"]) <= 1e-9
        bundle = io.read(out_path)[1]
        assert bundle.complement_basis.shape == (3, 1)
        assert run(capsys, "verify", out_path)[0] == 0

    def test_identity_trivial(self, tmp_path, capsys):
        out_path = tmp_path / "bundle.json"
        code, _ = run(capsys, "dilate", write_pair(tmp_path / "i.json", identity_pair()),
                      "--out", out_path)
        assert code == 0
        assert io.read(out_path)[1].is_degenerate

    def test_zero_vectors(self, tmp_path, capsys):
        path = write_pair(tmp_path / "z.json", FramePair(np.zeros((2, 2)), np.zeros((2, 2))))
        assert run(capsys, "dilate", path)[0] == 1

    def test_non_hilbert(self, tmp_path, capsys):
        pair = generate(GenSpec(2, 4, p=3.0, seed=2))
        assert run(capsys, "dilate", write_pair(tmp_path / "p.json", pair))[0] == 0


class TestDual:
    def test_identity_and_mercedes(self, tmp_path, capsys):
        code, out = run(capsys, "dual", write_pair(tmp_path / "i.json", identity_pair()))
        assert code == 0
        assert np.array_equal(io.loads(out)[1].vectors, np.eye(2))
        code, out = run(capsys, "dual", write_pair(tmp_path / "m.json", mercedes_pair()))
        np.testing.assert_allclose(io.loads(out)[1].vectors, MERCEDES_T * 2 / 3, atol=1e-15)

    def test_dual_of_dual(self, tmp_path, capsys):
        pair = generate(GenSpec(3, 6, p=1.5, seed=5, kind=GenKind.RANDOM_PASF))
        src = write_pair(tmp_path / "p.json", pair)
        assert run(capsys, "dual", src, "--out", tmp_path / "d.json")[0] == 0
        assert run(capsys, "dual", tmp_path / "d.json", "--out", tmp_path / "dd.json")[0] == 0
        back = io.read(tmp_path / "dd.json")[1]
        assert np.abs(back.functionals - pair.functionals).max() <= 1e-10
        assert np.abs(back.vectors - pair.vectors).max() <= 1e-10

    def test_singular(self, tmp_path, capsys):
        path = write_pair(tmp_path / "z.json", FramePair(np.zeros((2, 2)), np.eye(2)))
        assert run(capsys, "dual", path)[0] == 1
