import os

from flask import Flask, request, jsonify
from flask_cors import CORS
from werkzeug.exceptions import HTTPException

import config
from alt_ogs import encode_alt, normalize_alt
from cli import cmd_table, decode_form, permutation_stats, validate_command
from errors import OGSError
from perm_core import format_cycles, format_one_line, parse_permutation, parse_word
from sn_ogs import encode_sn, normalize_sn
from verify_oracle import DEFAULT_SUITES, SUITES, SuiteOptions, run_suites

# --- Configuration ---
app = Flask(__name__)
# Browser frontends may call the JSON API from another origin
CORS(app, resources={r"/api/*": {"origins": "*"}})
# Only print in non-testing environments to avoid CI noise
if not os.getenv("PYTEST_CURRENT_TEST"):
    print("Verify suites over the API are capped at n =", config.API_NMAX)


def _bad_request(message, errors=None):
    body = {"message": message, "success": False}
    if errors:
        body["errors"] = errors
    return jsonify(body), 400


def _request_command(verb, data, text_key):
    """Map a JSON body onto the command fields validate_command expects."""
    return {
        "verb": verb,
        "group": data.get("group"),
        "degree": data.get("n"),
        "text": data.get(text_key),
    }


def _validated(verb, text_key):
    """Returns (command, None) or (None, error response)."""
    # silent=True keeps invalid JSON from producing an HTML error page
    data = request.get_json(silent=True)
    if not isinstance(data, dict):
        return None, _bad_request("Invalid JSON payload.")
    command = _request_command(verb, data, text_key)
    is_valid, errors = validate_command(command)
    if not is_valid:
        return None, _bad_request(errors[0], errors)
    return command, None


@app.errorhandler(OGSError)
def handle_ogs_error(e):
    app.logger.info("%s: %s", type(e).__name__, e)
    return jsonify({"message": str(e), "error": type(e).__name__, "success": False}), e.http_status


@app.errorhandler(HTTPException)
def handle_http_error(e):
    return jsonify({"message": e.description, "success": False}), e.code


@app.route("/api/health", methods=["GET"])
def health():
    return jsonify({"success": True, "status": "ok"}), 200


@app.route("/api/encode", methods=["POST"])
def handle_encode():
    """Permutation (one-line or cycles) to its canonical form."""
    command, error = _validated("encode", "permutation")
    if error:
        return error
    p = parse_permutation(command["text"], command["degree"])
    form = encode_alt(p) if command["group"] == "alt" else encode_sn(p)
    return jsonify({"form": str(form), "exponents": list(form.exponents), "success": True}), 200


@app.route("/api/decode", methods=["POST"])
def handle_decode():
    """Canonical form text to the permutation it denotes."""
    command, error = _validated("decode", "form")
    if error:
        return error
    p = decode_form(command["group"], command["degree"], command["text"])
    return jsonify({"one_line": format_one_line(p), "cycles": format_cycles(p), "success": True}), 200


@app.route("/api/normalize", methods=["POST"])
def handle_normalize():
    command, error = _validated("normalize", "word")
    if error:
        return error
    w = parse_word(command["text"], command["degree"])
    form = normalize_alt(w) if command["group"] == "alt" else normalize_sn(w)
    return jsonify({"form": str(form), "exponents": list(form.exponents), "success": True}), 200


@app.route("/api/stats", methods=["POST"])
def handle_stats():
    command, error = _validated("stats", "permutation")
    if error:
        return error
    stats = permutation_stats(parse_permutation(command["text"], command["degree"]))
    return jsonify({**stats, "success": True}), 200


@app.route("/api/convert", methods=["POST"])
def handle_convert():
    command, error = _validated("convert", "permutation")
    if error:
        return error
    p = parse_permutation(command["text"], command["degree"])
    return jsonify({"one_line": format_one_line(p), "cycles": format_cycles(p), "success": True}), 200


@app.route("/api/table", methods=["GET"])
def handle_table():
    """Every canonical form of the group with its permutation and maj."""
    group = request.args.get("group")
    n = request.args.get("n", type=int)
    is_valid, errors = validate_command({"verb": "table", "group": group, "degree": n})
    if not is_valid:
        return _bad_request(errors[0], errors)

    rows = []
    for line in cmd_table(group, n).splitlines()[1:]:
        exponents, one_line, cycle_text, maj = line.split("\t")
        rows.append({"tuple": exponents, "one_line": one_line, "cycles": cycle_text, "maj": int(maj)})
    return jsonify({"group": group, "n": n, "rows": rows, "success": True}), 200


@app.route("/api/verify", methods=["POST"])
def handle_verify():
    """Run verification suites; degrees are capped so requests stay small."""
    data = request.get_json(silent=True)
    if not isinstance(data, dict):
        return _bad_request("Invalid JSON payload.")

    suite = data.get("suite")
    if suite is None:
        names = list(DEFAULT_SUITES)
    elif isinstance(suite, str):
        names = [suite]
    elif isinstance(suite, list) and all(isinstance(name, str) for name in suite):
        names = suite
    else:
        return _bad_request("suite must be a suite name or a list of names.")
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        return _bad_request(f"Unknown suite: {', '.join(unknown)}.")

    nmax = data.get("nmax", config.API_NMAX)
    seed = data.get("seed", config.SEED)
    for key, value in (("nmax", nmax), ("seed", seed)):
        if not isinstance(value, int) or isinstance(value, bool):
            return _bad_request(f"{key} must be an integer.")
    if nmax > config.API_NMAX:
        return _bad_request(f"nmax may be at most {config.API_NMAX} over the API.")

    options = SuiteOptions(n_max=nmax, seed=seed, trials=min(config.FUZZ_TRIALS, 1000))
    app.logger.info("verify %s up to n=%d", ",".join(names), nmax)
    reports = run_suites(names, options)
    body = [
        {
            "suite": report.suite,
            "checked": report.checked,
            "passed": report.passed,
            "elapsed_ms": round(report.elapsed * 1000),
            "first_failure": str(report.first_failure) if report.first_failure else None,
        }
        for report in reports
    ]
    return jsonify({"reports": body, "success": all(report.ok for report in reports)}), 200


# --- Application Runner ---

if __name__ == "__main__":
    # Use environment variable for debug mode (default: False for security)
    debug_mode = os.getenv('FLASK_DEBUG', 'False').lower() == 'true'
    app.run(debug=debug_mode, port=int(os.getenv("PORT", 5000)))
