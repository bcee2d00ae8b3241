"""Carrier distortion versus payload size.

For each payload fill level, hides random bytes in a random or given
carrier and reports PSNR, the largest per-channel change, and how many bits
flipped in each bit plane. Only the three lowest planes should ever change.
"""

import argparse
import math

import numpy as np

from cfgstego import bmp
from cfgstego.embed import max_payload_bytes
from cfgstego.grammar import default_grammar
from cfgstego.lexicon import load_lexicon
from cfgstego.stego import hide


def psnr(a: np.ndarray, b: np.ndarray) -> float:
    mse = np.mean((a.astype(np.float64) - b.astype(np.float64)) ** 2)
    return math.inf if mse == 0 else 10 * math.log10(255.0**2 / mse)


def bitplane_flips(a: np.ndarray, b: np.ndarray) -> list[int]:
    diff = np.bitwise_xor(a, b)
    return [int(((diff >> k) & 1).sum()) for k in range(8)]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--carrier", help="24-bit BMP; random 256x256 if omitted")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--fills", default="0.01,0.1,0.5,1.0",
                    help="comma-separated fractions of the maximum payload")
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    if args.carrier:
        carrier = bmp.read(args.carrier)
    else:
        carrier = bmp.Image(rng.integers(0, 256, (256, 256, 3), dtype=np.uint8))
    grammar, lexicon = default_grammar(), load_lexicon()
    cap = max_payload_bytes(carrier.width, carrier.height)
    print(f"carrier {carrier.width}x{carrier.height}, max payload {cap} bytes")
    print(f"{'fill':>6} {'bytes':>8} {'pixels':>8} {'PSNR dB':>8} {'max d':>6}  flips per plane (LSB first)")
    for fill in (float(f) for f in args.fills.split(",")):
        n = int(cap * fill)
        hidden = hide(carrier, rng.bytes(n), grammar, lexicon, seed=args.seed)
        a, b = carrier.pixels, hidden.image.pixels
        delta = int(np.abs(a.astype(int) - b.astype(int)).max())
        print(f"{fill:6.2f} {n:8d} {len(hidden.plan):8d} {psnr(a, b):8.2f} {delta:6d}  "
              f"{bitplane_flips(a, b)}")


if __name__ == "__main__":
    main()
