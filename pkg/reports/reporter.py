# reports/reporter.py
# renders census tables, verification reports and series dumps as json, csv, ndjson or text.

import io
import json

import pandas as pd

from models.count_table import CountTable
from models.rational_function import RationalFunction
from models.series import TruncatedSeries
from models.verification import VerificationReport


class Reporter:
    """
    turns analyzer outputs into a single string in the configured format.
    json and ndjson are sorted and compact so identical runs give identical bytes.
    """

    FORMATS = ("json", "csv", "ndjson", "text")

    def __init__(self, fmt: str = "json"):
        if fmt not in self.FORMATS:
            raise ValueError(f"unknown output format {fmt!r}, expected one of {', '.join(self.FORMATS)}")
        self.fmt = fmt

    @staticmethod
    def _dumps(payload) -> str:
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))

    @staticmethod
    def _csv(frame: pd.DataFrame) -> str:
        buffer = io.StringIO()
        frame.to_csv(buffer, index=False, lineterminator="\n")
        return buffer.getvalue().rstrip("\n")

    # --- census tables ---

    def table(self, table: CountTable) -> str:
        if self.fmt == "json":
            return self._dumps(table.to_json())
        if self.fmt == "csv":
            return self._csv(table.to_dataframe())
        if self.fmt == "ndjson":
            return "\n".join(
                self._dumps({"genus": table.genus, **dict(zip(table.axis, row[:-1])), "count": row[-1]})
                for row in table.rows()
            )
        output = [
            "=" * 70,
            f"ROOTED CENSUS, GENUS {table.genus}",
            "=" * 70,
            f"\n--- 🔢 by ({', '.join(table.axis)}) ---",
        ]
        for row in table.rows():
            index = ", ".join(str(i) for i in row[:-1])
            output.append(f"  ({index}){'':<4} {row[-1]:>12,}")
        output.append(f"\n  {'TOTAL:':<20} {table.total:>12,}")
        return "\n".join(output)

    # --- verification ---

    def report(self, report: VerificationReport) -> str:
        payload = report.to_json()
        if self.fmt == "json":
            return self._dumps(payload)
        if self.fmt == "ndjson":
            lines = [self._dumps({"name": report.name, "failure": f}) for f in report.failures]
            summary = {k: payload[k] for k in ("name", "passed", "checked")}
            return "\n".join(lines + [self._dumps(summary)])
        if self.fmt == "csv":
            row = {"name": report.name, "passed": report.passed, "checked": report.checked,
                   "failures": len(report.failures)}
            return self._csv(pd.DataFrame([row]))
        status = "✅ PASS" if report.passed else "❌ FAIL"
        output = ["=" * 70, report.name.upper(), "=" * 70, f"\n  {status}  ({report.checked} objects checked)"]
        if report.failures:
            output.append("\n--- ⚠️ FAILURES ---")
            output.extend(f"  - {f}" for f in report.failures[:10])
            if len(report.failures) > 10:
                output.append(f"  ... and {len(report.failures) - 10} more")
            output.append(f"\n  witness: {payload['witness']}")
        if report.details:
            output.append("\n--- 📝 DETAILS ---")
            output.extend(f"  {k:<30} {v}" for k, v in sorted(report.details.items(), key=lambda kv: str(kv[0])))
        return "\n".join(output)

    def reports(self, reports: list[VerificationReport]) -> str:
        if self.fmt == "json":
            return self._dumps([r.to_json() for r in reports])
        if self.fmt == "csv":
            rows = [{"name": r.name, "passed": r.passed, "checked": r.checked, "failures": len(r.failures)}
                    for r in reports]
            return self._csv(pd.DataFrame(rows))
        separator = "\n" if self.fmt == "ndjson" else "\n\n"
        return separator.join(self.report(r) for r in reports)

    # --- series ---

    def series(self, name: str, s: TruncatedSeries, rational: RationalFunction | None = None,
               extra: dict | None = None) -> str:
        """a truncated series as rows [e1, ..., ek, numerator, denominator]"""
        rows = s.to_rows()
        if self.fmt == "json":
            payload = {"name": name, "variables": list(s.variables), "order": s.order, "terms": rows}
            if rational is not None:
                payload["rational"] = rational.to_dump()
            payload.update(extra or {})
            return self._dumps(payload)
        if self.fmt == "ndjson":
            return "\n".join(
                self._dumps({"name": name, "exponents": r[:-2], "coefficient": [r[-2], r[-1]]}) for r in rows
            )
        if self.fmt == "csv":
            frame = pd.DataFrame(rows, columns=list(s.variables) + ["numerator", "denominator"])
            return self._csv(frame)
        output = ["=" * 70, f"SERIES {name} in ({', '.join(s.variables)}) to order {s.order}", "=" * 70, ""]
        for exps, c in s.terms():
            monomial = " ".join(f"{v}^{e}" for v, e in zip(s.variables, exps) if e) or "1"
            output.append(f"  {monomial:<30} {c}")
        if rational is not None:
            output.append(f"\n--- 📝 RATIONAL FORM ---\n  {rational}")
        for k, v in (extra or {}).items():
            output.append(f"  {k:<30} {v}")
        return "\n".join(output)

    def rational(self, name: str, f: RationalFunction) -> str:
        if self.fmt in ("json", "ndjson"):
            return self._dumps({"name": name, **f.to_dump()})
        if self.fmt == "csv":
            dump = f.to_dump()
            rows = [["numerator"] + r for r in dump["numerator"]] + [["denominator"] + r for r in dump["denominator"]]
            columns = ["part"] + [f"e{i + 1}" for i in range(f.nvars)] + ["coefficient"]
            return self._csv(pd.DataFrame(rows, columns=columns))
        return "\n".join(["=" * 70, f"RATIONAL FUNCTION {name}", "=" * 70, f"\n  {f}"])
