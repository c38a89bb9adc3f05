import json
import subprocess
import time
import urllib.request

import pytest

import synthroute as sr


def run(cli, *args):
    return subprocess.run([cli, *args], capture_output=True, text=True, check=False)


def test_eval_prints_the_harness_numbers(cli, fixtures):
    out = run(cli, "eval", "--gold", str(fixtures / "eval" / "gold.jsonl"),
              "--pred", str(fixtures / "eval" / "pred.jsonl"))
    assert out.returncode == 0, out.stderr
    row = [l for l in out.stdout.splitlines() if l.startswith("synthroute")][0].split()
    assert row[1:] == ["0.833", "0.714", "0.769"]

    out = run(cli, "eval", "--json", "--gold", str(fixtures / "eval" / "gold.jsonl"),
              "--pred", str(fixtures / "eval" / "pred.jsonl"))
    report = json.loads(out.stdout)["report"]
    m = sr.evaluate_files(str(fixtures / "eval" / "gold.jsonl"),
                          str(fixtures / "eval" / "pred.jsonl"))
    assert report[0]["f1"] == pytest.approx(m["f1"])


def test_bad_weights_exit_nonzero(cli, tmp_path, fixtures):
    ingest = run(cli, "ingest", str(fixtures / "papers_small.jsonl"), "--smiles", "CCO",
                 "--config", str(fixtures / "service" / "service.ini"),
                 "--data-dir", str(tmp_path))
    assert ingest.returncode == 0, ingest.stderr
    summary = json.loads(ingest.stdout)
    out = run(cli, "rank", "--workspace", summary["workspace_file"], "--weights", "0.5,0.6,0.2")
    assert out.returncode != 0
    assert "InvalidWeights" in out.stderr


class Server:
    def __init__(self, cli, config, data_dir):
        self.proc = subprocess.Popen(
            [cli, "serve", "--port", "0", "--config", str(config), "--data-dir", str(data_dir)],
            stdout=subprocess.PIPE, text=True)
        line = self.proc.stdout.readline()
        assert line.startswith("listening on "), line
        self.base = line.split()[-1]

    def call(self, method, path, body=None):
        data = None if body is None else json.dumps(body).encode()
        req = urllib.request.Request(self.base + path, data=data, method=method,
                                     headers={"Content-Type": "application/json"})
        try:
            with urllib.request.urlopen(req, timeout=30) as r:
                return r.status, json.loads(r.read())
        except urllib.error.HTTPError as e:
            return e.code, json.loads(e.read())

    def close(self):
        self.proc.terminate()
        self.proc.wait(timeout=10)


def wait_job(server, job):
    for _ in range(600):
        status, body = server.call("GET", "/jobs/" + job)
        if body["state"] in ("done", "failed", "canceled"):
            return body
        time.sleep(0.05)
    raise AssertionError("job did not finish")


def test_rank_matches_the_api(cli, tmp_path, fixtures):
    server = Server(cli, fixtures / "service" / "service.ini", tmp_path)
    try:
        status, created = server.call("POST", "/workspaces", {"starting_smiles": "CCO"})
        assert status == 201
        assert wait_job(server, created["search_job"])["state"] == "done"
        ws = "/workspaces/" + created["id"]

        def add(parent, reactant, product, y, hours):
            status, body = server.call("POST", ws + "/tree/nodes", {
                "parent": parent,
                "reaction": {"reactant": reactant, "product": product,
                             "yield": y, "duration_hours": hours}})
            assert status == 201, body
            return body["node_id"]

        a = add(0, "CCO", "CC=O", 0.8, 2.0)
        add(a, "CC=O", "CC(=O)O", 0.9, 5.0)
        add(0, "CCO", "CCOCC", 0.5, 1.0)
        add(a, "CC=O", "CC(O)C#N", 0.6, 0.5)

        for weights in ((0.1, 0.3, 0.6), (0.6, 0.3, 0.1), (0.2, 0.7, 0.1)):
            status, api = server.call("PUT", ws + "/weights", dict(
                zip(("steps", "duration", "yield"), weights)))
            assert status == 200
            out = run(cli, "rank", "--json", "--workspace",
                      str(tmp_path / (created["id"] + ".json")))
            assert out.returncode == 0, out.stderr
            cli_rows = json.loads(out.stdout)["rankings"]
            assert [r["leaf"] for r in cli_rows] == [r["leaf"] for r in api["rankings"]]
            assert cli_rows == api["rankings"]
    finally:
        server.close()
