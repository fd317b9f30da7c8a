#!/usr/bin/env python3
"""Regenerates the bundled RUP fixture files.

Performance values are constructed illustrative data: the source material
describes the criteria families but publishes no project numbers. Derived
columns (risk exposure = likelihood x magnitude) are computed here, not by
the engine.
"""

import json
import random
from pathlib import Path

HERE = Path(__file__).resolve().parent

NOTE = ("Constructed illustrative data; criteria follow the RUP task "
        "description, performance values do not come from a real project.")


def write(name, doc):
    path = HERE / name
    path.write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
    print("wrote", path)


def tools_fixture(rng):
    tool_criteria = [
        "features_functions", "integration", "applicability", "extendibility",
        "team_support", "usability", "quality", "performance", "maturity",
    ]
    vendor_criteria = [
        "vendor_stability", "support_availability", "training_availability",
        "growth_direction",
    ]
    cost_criteria = ["acquisition_cost", "implementation_cost",
                     "maintenance_cost"]

    weights = {
        "features_functions": 5, "integration": 3, "applicability": 3,
        "extendibility": 2, "team_support": 2, "usability": 3, "quality": 4,
        "performance": 3, "maturity": 2, "vendor_stability": 2,
        "support_availability": 2, "training_availability": 1,
        "growth_direction": 1, "acquisition_cost": 4,
        "implementation_cost": 3, "maintenance_cost": 3,
    }

    criteria = []
    for name in tool_criteria + vendor_criteria:
        criteria.append({
            "name": name, "direction": "maximize",
            "data_type": "quantitative", "weight": weights[name],
        })
    for name in cost_criteria:
        criteria.append({
            "name": name, "direction": "minimize",
            "data_type": "quantitative", "weight": weights[name],
        })

    alternatives = [f"tool-{i:02d}" for i in range(1, 11)]
    performance = []
    for _ in alternatives:
        row = [rng.randint(1, 5) for _ in tool_criteria + vendor_criteria]
        row += [round(rng.uniform(5, 120), 1) for _ in cost_criteria]
        performance.append(row)

    write("tools.json", {
        "description": "Select and acquire tools (choice over 10 candidate "
                       "tools, graded 1-5 plus costs). " + NOTE,
        "problem": "choice",
        "alternatives": alternatives,
        "alternatives_nature": "discrete",
        "decision_maker_count": 1,
        "criteria": criteria,
        "performance": performance,
    })
    write("tools_usage.json", {
        "easiness_required": "easy",
        "skills_available": "weak",
    })


def risks_fixture(rng):
    resources = [
        "organization", "funding", "people", "time", "business", "technical",
        "scope", "technological", "external_dependency", "schedule",
    ]
    criteria = [
        {"name": "schedule_deviation", "direction": "maximize",
         "data_type": "quantitative"},
        {"name": "effort_deviation", "direction": "maximize",
         "data_type": "quantitative"},
        {"name": "cost_deviation", "direction": "maximize",
         "data_type": "quantitative"},
        {"name": "likelihood", "direction": "maximize",
         "data_type": "quantitative"},
        {"name": "risk_exposure", "direction": "maximize",
         "data_type": "quantitative"},
        {"name": "risk_magnitude", "direction": "maximize",
         "data_type": "quantitative"},
        {"name": "type", "direction": "maximize", "data_type": "qualitative",
         "scale": ["indirect", "direct"]},
        {"name": "resource", "direction": "maximize",
         "data_type": "qualitative", "scale": resources},
    ]

    alternatives = [f"risk-{i:02d}" for i in range(1, 26)]
    performance = []
    for _ in alternatives:
        likelihood = round(rng.uniform(0.05, 0.95), 2)
        magnitude = round(rng.uniform(1, 10), 1)
        exposure = round(likelihood * magnitude, 2)
        performance.append([
            round(rng.uniform(0, 30), 1),   # schedule deviation, %
            round(rng.uniform(0, 40), 1),   # effort deviation, %
            round(rng.uniform(0, 25), 1),   # cost deviation, %
            likelihood,
            exposure,
            magnitude,
            rng.choice(["direct", "indirect"]),
            rng.choice(resources),
        ])

    write("risks.json", {
        "description": "Analyze and prioritize risks (ranking over 25 "
                       "risks; mixed quantitative/qualitative criteria, no "
                       "declared weights). " + NOTE,
        "problem": "ranking",
        "alternatives": alternatives,
        "alternatives_nature": "discrete",
        "decision_maker_count": 1,
        "criteria": criteria,
        "performance": performance,
    })
    write("risks_l2_weights.json", {"tool": 1.0})
    preference_functions = {
        "schedule_deviation": {"shape": "linear", "q": 2.0, "p": 10.0},
        "effort_deviation": {"shape": "linear", "q": 2.0, "p": 12.0},
        "cost_deviation": {"shape": "linear", "q": 1.0, "p": 8.0},
        "likelihood": {"shape": "vshape", "p": 0.4},
        "risk_exposure": {"shape": "vshape", "p": 3.0},
        "risk_magnitude": {"shape": "linear", "q": 0.5, "p": 4.0},
        "type": {"shape": "usual"},
        "resource": {"shape": "usual"},
    }
    write("risks_config.json", {
        "preference_functions": preference_functions,
    })
    # Variant carrying utilities too, so either shortlisted family can run.
    write("risks_full_config.json", {
        "preference_functions": preference_functions,
        "utilities": {
            "schedule_deviation": [[0.0, 0.0], [30.0, 1.0]],
            "effort_deviation": [[0.0, 0.0], [40.0, 1.0]],
            "cost_deviation": [[0.0, 0.0], [25.0, 1.0]],
            "likelihood": [[0.0, 0.0], [1.0, 1.0]],
            "risk_exposure": [[0.0, 0.0], [10.0, 1.0]],
            "risk_magnitude": [[0.0, 0.0], [10.0, 1.0]],
            "type": [[0.0, 0.0], [1.0, 1.0]],
            "resource": [[0.0, 0.0], [9.0, 1.0]],
        },
    })


def use_cases_fixture(rng):
    criteria = [
        {"name": "benefit", "direction": "maximize",
         "data_type": "qualitative",
         "scale": ["useful", "important", "critical"]},
        {"name": "architectural_impact", "direction": "maximize",
         "data_type": "qualitative", "scale": ["none", "extends", "modifies"]},
        {"name": "risk_to_mitigate", "direction": "maximize",
         "data_type": "qualitative",
         "scale": ["component_suitability", "product_availability",
                   "performance"]},
        {"name": "coverage", "direction": "maximize",
         "data_type": "quantitative"},
        {"name": "demonstration", "direction": "maximize",
         "data_type": "fuzzy"},
    ]

    alternatives = [f"uc-{i:02d}" for i in range(1, 31)]
    performance = []
    for _ in alternatives:
        demo_m = round(rng.uniform(1, 9), 1)
        spread_l = round(rng.uniform(0.2, 1.0), 1)
        spread_u = round(rng.uniform(0.2, 1.0), 1)
        performance.append([
            rng.choice(["useful", "important", "critical"]),
            rng.choice(["none", "extends", "modifies"]),
            rng.choice(["component_suitability", "product_availability",
                        "performance"]),
            round(rng.uniform(0, 100), 1),
            [round(demo_m - spread_l, 1), demo_m,
             round(demo_m + spread_u, 1)],
        ])

    write("use_cases.json", {
        "description": "Prioritize use cases (choice over 30 use cases; "
                       "qualitative benefit/impact plus fuzzy demonstration "
                       "value). " + NOTE,
        "problem": "choice",
        "alternatives": alternatives,
        "alternatives_nature": "discrete",
        "decision_maker_count": 1,
        "criteria": criteria,
        "performance": performance,
    })
    write("use_cases_usage.json", {"tool_required": True})


def fuzzy_registry():
    write("fuzzy_registry.json", {
        "methods": [{
            "method_id": "fuzzy",
            "problems": ["choice", "ranking", "sorting"],
            "count_buckets": "any",
            "natures": "any",
            "incompatibility_support": "any",
            "data_types": "any",
            "measure_scale_support": "any",
            "weighting_types": "any",
            "tool_available": "any",
            "notation": "any",
            "easiness": "difficult",
            "skill_demand": "strong",
        }],
    })


def main():
    rng = random.Random(20260809)
    tools_fixture(rng)
    risks_fixture(rng)
    use_cases_fixture(rng)
    fuzzy_registry()


if __name__ == "__main__":
    main()
