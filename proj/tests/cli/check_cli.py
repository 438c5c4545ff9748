"""End-to-end checks of the command line tool: exit codes, golden outputs,
schema conformance and byte-identical reruns."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

EXE = sys.argv[1]
SCHEMAS = pathlib.Path(sys.argv[2])
failures = []


def run(*args):
    p = subprocess.run([EXE, *args], capture_output=True, text=True)
    return p.returncode, p.stdout


def check(name, cond):
    print(("PASS " if cond else "FAIL ") + name)
    if not cond:
        failures.append(name)


def schema_ok(name, out, schema):
    try:
        jsonschema.validate(json.loads(out), json.loads((SCHEMAS / schema).read_text()))
        check(name + " schema", True)
    except (jsonschema.ValidationError, json.JSONDecodeError) as e:
        print(e)
        check(name + " schema", False)


code, out = run("count", "classes", "--n", "4", "--r", "1")
check("count classes 4 1", code == 0 and out == "240\n")
code, out = run("count", "classes", "--n", "3", "--r", "0")
check("count classes 3 0", code == 0 and out == "24\n")

code, out = run("tableaux", "weight", "--word", "de")
check("weight of de", code == 0 and out == "alpha^2*beta + alpha*beta^2 + alpha*beta*q\n")

code, out = run("verify", "tilings", "--word", "de")
check("tilings de", code == 0 and json.loads(out)["tilings"] == 1)
schema_ok("tilings de", out, "verify_tilings.schema.json")
code, out = run("verify", "tilings", "--word", "daadea")
check("tilings daadea", code == 0 and json.loads(out)["all_equal"])

# k = 1, n = 2 at alpha = 1/2, beta = 1/3, q = 1/5, from an independent sympy solve
code, out = run("stationary", "--k", "1", "--n", "2", "--alpha", "1/2", "--beta", "1/3", "--q", "1/5", "--format", "csv")
check("stationary csv golden", code == 0 and out == "word,prob\ndd,5/14\nde,31/126\ned,5/21\nee,10/63\n")
args = ["stationary", "--n", "4", "--sector", "2", "--alpha", "1/2", "--beta", "1/3", "--q", "1/5"]
code, out = run(*args)
check("stationary json", code == 0 and sum(1 for _ in json.loads(out)["stationary"]) == 24)
schema_ok("stationary", out, "stationary.schema.json")
check("stationary deterministic", run(*args)[1] == out)

with tempfile.TemporaryDirectory() as tmp:
    qm = pathlib.Path(tmp) / "q.json"
    qm.write_text(json.dumps({"q0inf": "1/5", "q0i": {"1": "1/7"}, "qij": {"2,1": "1/3"}}))
    jsonschema.validate(json.loads(qm.read_text()), json.loads((SCHEMAS / "qmatrix.schema.json").read_text()))
    code, out = run("stationary", "--k", "3", "--n", "3", "--sector", "1,1", "--alpha", "1/2", "--beta", "1/3",
                    "--qmatrix", str(qm))
    check("stationary qmatrix", code == 0 and json.loads(out)["params"]["qij"] == {"2,1": "1/3"})
    schema_ok("stationary qmatrix", out, "stationary.schema.json")
    code, _ = run("tableaux", "weight", "--word", "de", "--qmatrix", str(qm))
    check("tableaux reject qmatrix", code == 2)

    svg = pathlib.Path(tmp) / "t.svg"
    code, _ = run("render", "--word", "daaddedae", "--out", str(svg))
    text = svg.read_text() if svg.exists() else ""
    check("render svg", code == 0 and text.startswith("<svg") and text.count("<polygon") == 18)

code, out = run("tableaux", "enumerate", "--word", "dae")
check("enumerate dae", code == 0 and json.loads(out)["count"] == 7)
schema_ok("enumerate dae", out, "tableaux.schema.json")

code, out = run("verify", "ansatz", "--k", "3", "--window", "4,2")
check("ansatz k=3 lambda=1", code == 0 and json.loads(out)["passed"])
schema_ok("ansatz", out, "verify_ansatz.schema.json")
code, out = run("verify", "ansatz", "--k", "2", "--window", "3,2", "--lambda", "alpha*beta")
check("ansatz lambda=alpha*beta fails", code == 1 and not json.loads(out)["passed"])

code, out = run("verify", "weights", "--k", "2", "--n", "4")
check("verify weights", code == 0 and json.loads(out)["passed"])
schema_ok("verify weights", out, "verify_weights.schema.json")

code, out = run("verify", "chain", "--n", "3", "--r", "1")
rep = json.loads(out)
check("verify chain", code == 0 and rep["states"] == 36 and rep["projection_ok"] and rep["balance_ok"])
schema_ok("verify chain", out, "verify_chain.schema.json")

for bad in (["tableaux", "weight", "--word", "dxe"], ["tableaux", "weight", "--word", "da3", "--k", "3"],
            ["stationary", "--n", "3", "--sector", "1", "--alpha", "3/2", "--beta", "1/3"],
            ["stationary", "--n", "3", "--sector", "4", "--alpha", "1/2", "--beta", "1/3"],
            ["count", "classes", "--n", "2", "--r", "3"], ["nonsense"], []):
    check("usage error " + " ".join(bad), run(*bad)[0] == 2)

sys.exit(1 if failures else 0)
