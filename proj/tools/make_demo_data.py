#!/usr/bin/env python3
"""Regenerates data/demo: a 12-service shop with three traffic clusters."""

import json
import random
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "data" / "demo"

# (a, b, messages per minute, mean bytes per message)
FLOWS = [
    # storefront
    ("webshop-bff", "catalog-api", 120, 2400),
    ("webshop-bff", "basket-api", 90, 900),
    ("basket-api", "basket-redis", 110, 300),
    ("catalog-api", "catalog-db", 100, 3000),
    ("webshop-bff", "identity-api", 40, 600),
    ("identity-api", "basket-api", 15, 200),
    # ordering
    ("ordering-api", "ordering-db", 80, 1500),
    ("ordering-api", "ordering-bgtasks", 35, 500),
    ("ordering-bgtasks", "ordering-db", 30, 800),
    # payment
    ("payment-api", "payment-gateway", 70, 700),
    ("payment-api", "webhooks-api", 25, 400),
    ("payment-gateway", "webhooks-api", 10, 300),
    # checkout path across clusters
    ("basket-api", "ordering-api", 8, 1200),
    ("ordering-api", "payment-api", 10, 600),
    ("webshop-bff", "ordering-api", 5, 400),
    ("identity-api", "ordering-api", 4, 200),
]

META = {
    "webshop-bff": ("public", "storefront", "stateless"),
    "catalog-api": ("public", "storefront", "stateless"),
    "catalog-db": ("public", "storefront", "stateful"),
    "basket-api": ("pii", "storefront", "stateless"),
    "basket-redis": ("pii", "storefront", "stateful"),
    "identity-api": ("pii", "identity", "stateless"),
    "ordering-api": ("pii", "ordering", "stateless"),
    "ordering-db": ("pii", "ordering", "stateful"),
    "ordering-bgtasks": ("pii", "ordering", "batch"),
    "payment-api": ("pci", "payment", "stateless"),
    "payment-gateway": ("pci", "payment", "stateless"),
    "webhooks-api": ("public", "payment", "stateless"),
}

NODES = ["node-a", "node-b", "node-c"]


def main() -> None:
    rng = random.Random(2024)
    records = []
    for minute in range(10):
        for a, b, rate, size in FLOWS:
            # a handful of pre-aggregated records per flow and minute
            for chunk in range(4):
                count = max(1, round(rate / 4 * rng.uniform(0.8, 1.2)))
                sender, receiver = (a, b) if rng.random() < 0.5 else (b, a)
                records.append({
                    "sender": sender,
                    "receiver": receiver,
                    "bytes": int(count * size * rng.uniform(0.7, 1.3)),
                    "count": count,
                    "timestamp": minute * 60000 + chunk * 15000 + rng.randrange(15000),
                })
    records.sort(key=lambda r: (r["timestamp"], r["sender"], r["receiver"]))

    OUT.mkdir(parents=True, exist_ok=True)
    with open(OUT / "trace.jsonl", "w") as f:
        for r in records:
            f.write(json.dumps(r, separators=(",", ":")) + "\n")

    meta = [{"id": s, "privacy": p, "function": fn, "operational": op}
            for s, (p, fn, op) in sorted(META.items())]
    (OUT / "meta.json").write_text(json.dumps(meta, indent=2) + "\n")

    services = sorted(META)
    current = {"nodes": NODES,
               "assignment": {s: NODES[i % len(NODES)] for i, s in enumerate(services)}}
    (OUT / "current_placement.json").write_text(json.dumps(current, indent=2) + "\n")

    config = {
        "k": 3,
        "nodes": NODES,
        "window": {"start": 0, "end": 600000},
        "weights": {"data": 1.0, "privacy": 0.25, "coupling": 1.0,
                    "functional": 0.5, "operational": 0.1},
        "latency_model": {"local_ms": 0.5, "remote_ms": 5.0},
    }
    (OUT / "config.json").write_text(json.dumps(config, indent=2) + "\n")


if __name__ == "__main__":
    main()
