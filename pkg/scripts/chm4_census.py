"""List the order-4 circulant Hadamard matrices by theta and cross-check against brute force."""
import itertools

from seqforge.constructions import circulant_hadamard4
from seqforge.corrcore import PhaseSequence, circulant
from seqforge.verify import is_hadamard


def main():
    built = {}
    for theta in itertools.product((0, 1), repeat=3):
        E = circulant_hadamard4(2, *theta)
        built[E] = theta
        print(theta, E.signs()[0])
    brute = {circulant(PhaseSequence.from_values(r, 2)) for r in itertools.product((1, -1), repeat=4)}
    brute = {C for C in brute if is_hadamard(C).holds}
    print(f"constructed {len(built)}, brute force {len(brute)}, identical: {set(built) == brute}")


if __name__ == "__main__":
    main()
