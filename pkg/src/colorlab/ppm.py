"""Binary PPM (P6, maxval 255) reader and writer."""

from __future__ import annotations

from .core import PixelBuffer, Rgb8


def ppm_bytes(buf: PixelBuffer) -> bytes:
    header = f"P6\n{buf.width} {buf.height}\n255\n".encode("ascii")
    payload = bytearray()
    for p in buf.pixels:
        payload.extend((p.r, p.g, p.b))
    return header + bytes(payload)


def write_ppm(buf: PixelBuffer, path: str) -> None:
    with open(path, "wb") as fh:
        fh.write(ppm_bytes(buf))


def parse_ppm(data: bytes) -> PixelBuffer:
    if data[:2] != b"P6":
        raise ValueError("bad magic: not a binary PPM (P6) file")
    pos = 2
    fields = []
    while len(fields) < 3:
        token, pos = _next_token(data, pos)
        fields.append(token)
    width, height, maxval = (int(f) for f in fields)
    if maxval != 255:
        raise ValueError(f"unsupported maxval {maxval}; only 255 is handled")
    if width <= 0 or height <= 0:
        raise ValueError(f"bad dimensions {width}x{height}")
    # exactly one whitespace byte separates the header from the payload
    payload = data[pos:]
    expected = 3 * width * height
    if len(payload) < expected:
        raise ValueError(f"truncated payload: expected {expected} bytes, got {len(payload)}")
    pixels = tuple(
        Rgb8(payload[i], payload[i + 1], payload[i + 2]) for i in range(0, expected, 3)
    )
    return PixelBuffer(width, height, pixels)


def read_ppm(path: str) -> PixelBuffer:
    with open(path, "rb") as fh:
        return parse_ppm(fh.read())


def _next_token(data: bytes, pos: int) -> tuple[bytes, int]:
    # skip whitespace and '#' comments, then read one header token
    while pos < len(data):
        c = data[pos : pos + 1]
        if c == b"#":
            while pos < len(data) and data[pos : pos + 1] != b"\n":
                pos += 1
        elif c.isspace():
            pos += 1
        else:
            break
    if pos >= len(data):
        raise ValueError("truncated header")
    start = pos
    while pos < len(data) and not data[pos : pos + 1].isspace():
        pos += 1
    if pos >= len(data):
        raise ValueError("truncated header")
    return data[start:pos], pos + 1
