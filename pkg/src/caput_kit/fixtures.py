"""Published reference values for S_5, used by ``verify`` and the tests."""

# rows 5, 4,1, 3,2, 3,1^2, 2^2,1, 2,1^3, 1^5
# columns 1^5, 1^3,2, 1,2^2, 1^2,3, 2,3, 1,4, 5
S5_ROWS = ("5", "4,1", "3,2", "3,1^2", "2^2,1", "2,1^3", "1^5")
S5_CLASSES = ("1^5", "1^3,2", "1,2^2", "1^2,3", "2,3", "1,4", "5")
S5_MATRIX = (
    (1, 1, 1, 1, 1, 1, 1),
    (5, 3, 1, 2, 0, 1, 0),
    (10, 4, 2, 1, 1, 0, 0),
    (20, 6, 0, 2, 0, 0, 0),
    (30, 6, 2, 0, 0, 0, 0),
    (60, 6, 0, 0, 0, 0, 0),
    (120, 0, 0, 0, 0, 0, 0),
)

# class sizes listed as (5), (4,1), (3,2), (3,1^2), (2^2,1), (2,1^3), (1^5)
S5_CLASS_SIZES = (
    ("5", 24),
    ("4,1", 30),
    ("3,2", 20),
    ("3,1^2", 20),
    ("2^2,1", 15),
    ("2,1^3", 10),
    ("1^5", 1),
)
