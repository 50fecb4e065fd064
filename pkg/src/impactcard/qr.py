"""QR symbol generation (ISO/IEC 18004), byte mode, error correction level M.

Encoding is deterministic: the smallest version that fits the payload is
chosen, and the data mask is selected by the standard's four penalty rules,
so identical payloads always produce identical symbols. Only what the card
needs is implemented: no numeric/alphanumeric/kanji modes, no Micro QR.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["QrMatrix", "encode_qr"]

# Per-version constants for error correction level M, versions 1..40:
# total codewords in the symbol, Reed-Solomon block count, and error
# correction codewords per block. Data codewords = total - blocks * ec.
_TOTAL_CODEWORDS = (
    26, 44, 70, 100, 134, 172, 196, 242, 292, 346,
    404, 466, 532, 581, 655, 733, 815, 901, 991, 1085,
    1156, 1258, 1364, 1474, 1588, 1706, 1828, 1921, 2051, 2185,
    2323, 2465, 2611, 2761, 2876, 3034, 3196, 3362, 3532, 3706,
)
_BLOCKS_M = (
    1, 1, 1, 2, 2, 4, 4, 4, 5, 5,
    5, 8, 9, 9, 10, 10, 11, 13, 14, 16,
    17, 17, 18, 20, 21, 23, 25, 26, 28, 29,
    31, 33, 35, 37, 38, 40, 43, 45, 47, 49,
)
_EC_PER_BLOCK_M = (
    10, 16, 26, 18, 24, 16, 18, 22, 22, 26,
    30, 22, 22, 24, 24, 28, 28, 26, 26, 26,
    26, 28, 28, 28, 28, 28, 28, 28, 28, 28,
    28, 28, 28, 28, 28, 28, 28, 28, 28, 28,
)
_ALIGNMENT = (
    (), (6, 18), (6, 22), (6, 26), (6, 30), (6, 34),
    (6, 22, 38), (6, 24, 42), (6, 26, 46), (6, 28, 50), (6, 30, 54),
    (6, 32, 58), (6, 34, 62), (6, 26, 46, 66), (6, 26, 48, 70),
    (6, 26, 50, 74), (6, 30, 54, 78), (6, 30, 56, 82), (6, 30, 58, 86),
    (6, 34, 62, 90), (6, 28, 50, 72, 94), (6, 26, 50, 74, 98),
    (6, 30, 54, 78, 102), (6, 28, 54, 80, 106), (6, 32, 58, 84, 110),
    (6, 30, 58, 86, 114), (6, 34, 62, 90, 118), (6, 26, 50, 74, 98, 122),
    (6, 30, 54, 78, 102, 126), (6, 26, 52, 78, 104, 130),
    (6, 30, 56, 82, 108, 134), (6, 34, 60, 86, 112, 138),
    (6, 30, 58, 86, 114, 142), (6, 34, 62, 90, 118, 146),
    (6, 30, 54, 78, 102, 126, 150), (6, 24, 50, 76, 102, 128, 154),
    (6, 28, 54, 80, 106, 132, 158), (6, 32, 58, 84, 110, 136, 162),
    (6, 26, 54, 82, 110, 138, 166), (6, 30, 58, 86, 114, 142, 170),
)

_EC_LEVEL_BITS_M = 0b00
_FORMAT_GENERATOR = 0x537  # BCH(15,5)
_FORMAT_MASK = 0x5412
_VERSION_GENERATOR = 0x1F25  # BCH(18,6)


@dataclass(frozen=True, slots=True)
class QrMatrix:
    """A finished symbol. `modules[row][col]` is True for a dark module."""

    version: int
    ec_level: str
    size: int
    modules: tuple[tuple[bool, ...], ...]


# --- GF(256) arithmetic and Reed-Solomon ---------------------------------------

_EXP = [0] * 512
_LOG = [0] * 256
_value = 1
for _power in range(255):
    _EXP[_power] = _value
    _LOG[_value] = _power
    _value <<= 1
    if _value & 0x100:
        _value ^= 0x11D
for _power in range(255, 512):
    _EXP[_power] = _EXP[_power - 255]


def _gf_mul(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return _EXP[_LOG[a] + _LOG[b]]


def _rs_generator(degree: int) -> list[int]:
    # product of (x + a^i) for i in 0..degree-1, coefficients highest power first
    poly = [1]
    for i in range(degree):
        root = _EXP[i]
        nxt = [0] * (len(poly) + 1)
        for j, coef in enumerate(poly):
            nxt[j] ^= coef
            nxt[j + 1] ^= _gf_mul(coef, root)
        poly = nxt
    return poly


def _rs_remainder(data: list[int], generator: list[int]) -> list[int]:
    remainder = [0] * (len(generator) - 1)
    for byte in data:
        factor = byte ^ remainder[0]
        remainder = remainder[1:] + [0]
        if factor:
            for i in range(len(remainder)):
                remainder[i] ^= _gf_mul(generator[i + 1], factor)
    return remainder


# --- data codeword assembly -----------------------------------------------------


def _count_bits(version: int) -> int:
    return 8 if version <= 9 else 16


def _data_codewords(version: int) -> int:
    index = version - 1
    return _TOTAL_CODEWORDS[index] - _BLOCKS_M[index] * _EC_PER_BLOCK_M[index]


def capacity_bytes(version: int) -> int:
    return (_data_codewords(version) * 8 - 4 - _count_bits(version)) // 8


def _fit_version(payload_len: int) -> int:
    for version in range(1, 41):
        if capacity_bytes(version) >= payload_len:
            return version
    raise ValueError(
        f"payload of {payload_len} bytes exceeds the {capacity_bytes(40)}-byte capacity of the largest symbol"
    )


class _BitBuffer:
    def __init__(self) -> None:
        self.bits: list[int] = []

    def append(self, value: int, width: int) -> None:
        for shift in range(width - 1, -1, -1):
            self.bits.append((value >> shift) & 1)

    def to_codewords(self) -> list[int]:
        codewords = []
        for i in range(0, len(self.bits), 8):
            byte = 0
            for bit in self.bits[i : i + 8]:
                byte = (byte << 1) | bit
            codewords.append(byte)
        return codewords


def _assemble_codewords(payload: bytes, version: int) -> list[int]:
    capacity_bits = _data_codewords(version) * 8
    buffer = _BitBuffer()
    buffer.append(0b0100, 4)  # byte mode
    buffer.append(len(payload), _count_bits(version))
    for byte in payload:
        buffer.append(byte, 8)
    terminator = min(4, capacity_bits - len(buffer.bits))
    buffer.append(0, terminator)
    if len(buffer.bits) % 8:
        buffer.append(0, 8 - len(buffer.bits) % 8)
    codewords = buffer.to_codewords()
    padding = (0xEC, 0x11)
    index = 0
    while len(codewords) < _data_codewords(version):
        codewords.append(padding[index % 2])
        index += 1
    return codewords


def _interleave(data: list[int], version: int) -> list[int]:
    index = version - 1
    block_count = _BLOCKS_M[index]
    ec_count = _EC_PER_BLOCK_M[index]
    total_data = len(data)
    short_len = total_data // block_count
    long_blocks = total_data % block_count

    blocks: list[list[int]] = []
    cursor = 0
    for b in range(block_count):
        length = short_len + (1 if b >= block_count - long_blocks else 0)
        blocks.append(data[cursor : cursor + length])
        cursor += length

    generator = _rs_generator(ec_count)
    ec_blocks = [_rs_remainder(block, generator) for block in blocks]

    stream: list[int] = []
    for column in range(max(len(b) for b in blocks)):
        for block in blocks:
            if column < len(block):
                stream.append(block[column])
    for column in range(ec_count):
        for ec in ec_blocks:
            stream.append(ec[column])
    return stream


# --- matrix construction ----------------------------------------------------------


def _build_patterns(version: int) -> tuple[list[list[int]], list[list[bool]]]:
    size = 17 + 4 * version
    modules = [[0] * size for _ in range(size)]
    is_function = [[False] * size for _ in range(size)]

    def set_function(row: int, col: int, dark: bool) -> None:
        modules[row][col] = 1 if dark else 0
        is_function[row][col] = True

    def draw_finder(row: int, col: int) -> None:
        for dr in range(-4, 5):
            for dc in range(-4, 5):
                r, c = row + dr, col + dc
                if 0 <= r < size and 0 <= c < size:
                    distance = max(abs(dr), abs(dc))
                    set_function(r, c, distance not in (2, 4))

    # finder patterns with separators at three corners
    draw_finder(3, 3)
    draw_finder(3, size - 4)
    draw_finder(size - 4, 3)

    # timing patterns
    for i in range(8, size - 8):
        set_function(6, i, i % 2 == 0)
        set_function(i, 6, i % 2 == 0)

    # alignment patterns, skipping the three finder corners
    centers = _ALIGNMENT[version - 1]
    last = len(centers) - 1
    for i, row in enumerate(centers):
        for j, col in enumerate(centers):
            if (i == 0 and j == 0) or (i == 0 and j == last) or (i == last and j == 0):
                continue
            for dr in range(-2, 3):
                for dc in range(-2, 3):
                    set_function(row + dr, col + dc, max(abs(dr), abs(dc)) != 1)

    # reserve the format areas (filled in after masking) and the dark module
    for i in range(9):
        if i != 6:
            set_function(i, 8, False)
            set_function(8, i, False)
    for i in range(8):
        set_function(8, size - 1 - i, False)
        if i < 7:
            set_function(size - 1 - i, 8, False)
    set_function(size - 8, 8, True)

    # version information blocks for version 7 and up
    if version >= 7:
        bits = _version_bits(version)
        for i in range(18):
            bit = (bits >> i) & 1 == 1
            set_function(i // 3, size - 11 + i % 3, bit)
            set_function(size - 11 + i % 3, i // 3, bit)

    return modules, is_function


def _version_bits(version: int) -> int:
    remainder = version
    for _ in range(12):
        remainder = (remainder << 1) ^ ((remainder >> 11) * _VERSION_GENERATOR)
    return (version << 12) | remainder


def _format_bits(mask: int) -> int:
    data = (_EC_LEVEL_BITS_M << 3) | mask
    remainder = data
    for _ in range(10):
        remainder = (remainder << 1) ^ ((remainder >> 9) * _FORMAT_GENERATOR)
    return ((data << 10) | remainder) ^ _FORMAT_MASK


def _draw_format(modules: list[list[int]], size: int, mask: int) -> None:
    bits = _format_bits(mask)

    def bit(i: int) -> int:
        return (bits >> i) & 1

    for i in range(6):
        modules[i][8] = bit(i)
    modules[7][8] = bit(6)
    modules[8][8] = bit(7)
    modules[8][7] = bit(8)
    for i in range(9, 15):
        modules[8][14 - i] = bit(i)
    for i in range(8):
        modules[8][size - 1 - i] = bit(i)
    for i in range(8, 15):
        modules[size - 15 + i][8] = bit(i)


def _place_data(modules: list[list[int]], is_function: list[list[bool]], stream: list[int], size: int) -> None:
    bits: list[int] = []
    for byte in stream:
        for shift in range(7, -1, -1):
            bits.append((byte >> shift) & 1)
    index = 0
    right = size - 1
    while right >= 1:
        if right == 6:
            right -= 1
        upward = ((right + 1) & 2) == 0
        for vertical in range(size):
            row = size - 1 - vertical if upward else vertical
            for col in (right, right - 1):
                if not is_function[row][col]:
                    # positions past the stream are remainder bits, left light
                    if index < len(bits):
                        modules[row][col] = bits[index]
                    index += 1
        right -= 2


_MASK_PREDICATES = (
    lambda r, c: (r + c) % 2 == 0,
    lambda r, c: r % 2 == 0,
    lambda r, c: c % 3 == 0,
    lambda r, c: (r + c) % 3 == 0,
    lambda r, c: (r // 2 + c // 3) % 2 == 0,
    lambda r, c: (r * c) % 2 + (r * c) % 3 == 0,
    lambda r, c: ((r * c) % 2 + (r * c) % 3) % 2 == 0,
    lambda r, c: ((r + c) % 2 + (r * c) % 3) % 2 == 0,
)


def _apply_mask(modules: list[list[int]], is_function: list[list[bool]], mask: int) -> None:
    predicate = _MASK_PREDICATES[mask]
    size = len(modules)
    for row in range(size):
        for col in range(size):
            if not is_function[row][col] and predicate(row, col):
                modules[row][col] ^= 1


def _penalty(modules: list[list[int]]) -> int:
    size = len(modules)
    score = 0

    # adjacent runs of five or more same-colored modules
    for line in modules:
        score += _run_penalty(line)
    for col in range(size):
        score += _run_penalty([modules[row][col] for row in range(size)])

    # 2x2 blocks of one color
    for row in range(size - 1):
        for col in range(size - 1):
            cell = modules[row][col]
            if cell == modules[row][col + 1] == modules[row + 1][col] == modules[row + 1][col + 1]:
                score += 3

    # finder-like 1:1:3:1:1 pattern with four light modules on either side
    needle_a = [1, 0, 1, 1, 1, 0, 1, 0, 0, 0, 0]
    needle_b = needle_a[::-1]
    for row in range(size):
        line = modules[row]
        column = [modules[r][row] for r in range(size)]
        for start in range(size - 10):
            if line[start : start + 11] in (needle_a, needle_b):
                score += 40
            if column[start : start + 11] in (needle_a, needle_b):
                score += 40

    # dark-module balance, 10 points per 5% step away from 50%
    dark = sum(sum(line) for line in modules)
    total = size * size
    score += (abs(20 * dark - 10 * total) // total) * 10
    return score


def _run_penalty(line: list[int]) -> int:
    score = 0
    run_value = line[0]
    run_length = 1
    for value in line[1:]:
        if value == run_value:
            run_length += 1
        else:
            if run_length >= 5:
                score += 3 + run_length - 5
            run_value = value
            run_length = 1
    if run_length >= 5:
        score += 3 + run_length - 5
    return score


def encode_qr(payload: str) -> QrMatrix:
    """Encode text as a byte-mode symbol at error correction level M.

    Raises ValueError for an empty payload and for payloads beyond the
    capacity of the largest (version 40) symbol.
    """
    if not payload:
        raise ValueError("empty payload")
    data = payload.encode("utf-8")
    version = _fit_version(len(data))
    size = 17 + 4 * version

    stream = _interleave(_assemble_codewords(data, version), version)
    modules, is_function = _build_patterns(version)
    _place_data(modules, is_function, stream, size)

    best_mask = 0
    best_score = None
    for mask in range(8):
        _apply_mask(modules, is_function, mask)
        _draw_format(modules, size, mask)
        score = _penalty(modules)
        _apply_mask(modules, is_function, mask)
        if best_score is None or score < best_score:
            best_score = score
            best_mask = mask
    _apply_mask(modules, is_function, best_mask)
    _draw_format(modules, size, best_mask)

    return QrMatrix(
        version=version,
        ec_level="M",
        size=size,
        modules=tuple(tuple(cell == 1 for cell in row) for row in modules),
    )
