"""Image steganography with grammar-generated coordinate text."""
