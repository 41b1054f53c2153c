# Built-in imports
from fractions import Fraction


def clear_line(n=100, stream=None):
    """
    Clears a previously-printed progress line in the terminal output.

    Parameters
    ----------
    n : int
        Number of characters to clear (defaults to 100).
    stream : file-like or None
        Where the progress line was printed (defaults to stdout).

    Returns
    -------
    None.
    """

    print(' ' * n, end='\r', file=stream)


def ceil_div(a, b):
    """
    Ceiling of a/b for a nonnegative integer a and a positive integer b.

    Parameters
    ----------
    a : int
        Numerator, at least 0.
    b : int
        Denominator, at least 1.

    Returns
    -------
    value : int
        The smallest integer not less than a/b.
    """
    if a < 0 or b < 1:
        raise ValueError(f'ceil_div needs a >= 0 and b >= 1, got {a}, {b}.')
    return (a + b - 1) // b


def parse_rational(text):
    """
    Reads an exact rational number such as "3", "-1/2" or "0.25".

    Parameters
    ----------
    text : str or int or Fraction
        The value to convert.

    Returns
    -------
    value : Fraction
        The exact value.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f'{text!r} is not an exact rational number.')


def parse_int_list(text):
    """
    Reads a comma separated list of integers such as "1,3,5".

    Parameters
    ----------
    text : str
        The list to convert. Whitespace around entries is ignored.

    Returns
    -------
    values : list of int
        The integers in order.
    """
    pieces = [piece.strip() for piece in str(text).split(',')]
    if not pieces or any(piece == '' for piece in pieces):
        raise ValueError(f'{text!r} is not a comma separated integer list.')
    try:
        return [int(piece) for piece in pieces]
    except ValueError:
        raise ValueError(f'{text!r} is not a comma separated integer list.')
