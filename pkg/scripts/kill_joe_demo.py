"""Walk through hiding "kill joe" in a synthetic 800x400 carrier.

Prints the framed bits, the chunk values, each chosen pixel with its digit
string and sentence, then decodes the pair back.
"""

import argparse

import numpy as np

from cfgstego import bmp
from cfgstego.grammar import default_grammar
from cfgstego.lexicon import load_lexicon
from cfgstego.payload import frame, to_chunks
from cfgstego.stego import hide, reveal
from cfgstego.textcodec import DigitLayout, coord_to_digits, render_sentence


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--message", default="kill joe")
    ap.add_argument("--seed", type=int, default=2011)
    args = ap.parse_args()

    payload = args.message.encode()
    carrier = bmp.Image(np.random.default_rng(args.seed).integers(0, 256, (400, 800, 3), dtype=np.uint8))
    grammar, lexicon = default_grammar(), load_lexicon()

    bits = "".join(map(str, frame(payload).bits))
    print(f"framed bits ({len(bits)}): {bits[:32]} | {bits[32:]}")
    print(f"9-bit chunks: {to_chunks(payload).chunks}")

    hidden = hide(carrier, payload, grammar, lexicon, seed=args.seed)
    layout = DigitLayout.for_image(carrier.width, carrier.height)
    for i, (c, words) in enumerate(zip(hidden.plan, hidden.text.sentences)):
        print(f"P{i:<2} ({c.x:3d},{c.y:3d})  {coord_to_digits(c, layout)}  {render_sentence(words)}")

    recovered = reveal(hidden.image, hidden.text.render(), lexicon)
    print(f"recovered: {recovered!r}")


if __name__ == "__main__":
    main()
