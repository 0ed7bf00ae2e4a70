"""Published statistics of modular lattices in dimensions 8, 12 and 16.

Each row gives: number, dimension, level d, minimum, kissing number, weak
secrecy gain and the theta coefficients A_0..A_9.  Only a few rows come with
an explicit code; the others are kept as statistics for comparison.
"""

from __future__ import annotations

from dataclasses import dataclass

_ROWS = """
  1   8   3  2    8 1.2077      1      0      8     64    120    192    424    576    920   1600
  2   8   5  2    8 1.0020      1      0      8     16     24     96    128    208    408    480
  3   8   5  4  120 1.2970      1      0      0      0    120      0    240      0    600      0
  4   8   6  3   16 1.1753      1      0      0     16     24     48    128    144    216    400
  5   8   7  2    8 0.8838      1      0      8      0     24     64     32    128    120    192
  6   8   7  3   16 1.1048      1      0      0     16     16     16     80    128    224    288
  7   8  11  3    8 1.0015      1      0      0      8      8      8     24     48     72     88
  8   8  14  2    8 0.5303      1      0      8      0     24      0     32      8     24     64
  9   8  14  3    8 0.9216      1      0      0      8      0      8     32      0     48     80
 10   8  15  3    8 0.8869      1      0      0      8      0      8     24      0     64     32
 11   8  15  4    8 1.0840      1      0      0      0      8     16      0     16     32     64
 12   8  23  3    8 0.6847      1      0      0      8      0      0     24      0      8     40
 13   8  23  5   16 1.0396      1      0      0      0      0     16      0      0     16      0
 14   8  23  5    8 1.1394      1      0      0      0      0      8      0      8     24     24
 15  12   3  1   12 0.4692      1     12     60    172    396   1032   2524   4704   8364  17164
 16  12   3  1    4 0.8342      1      4     28    100    332    984   2236   5024   9772  16516
 17  12   3  1    4 0.9385      1      4     12    100    428    984   2092   5024   9708  16516
 18  12   3  2   24 1.2012      1      0     24     64    228    960   2200   5184  10524  16192
 19  12   3  2   12 1.3650      1      0     12     64    300    960   2092   5184  10476  16192
 20  12   3  3   64 1.5806      1      0      0     64    372    960   1984   5184  10428  16192
 21  12   5  2   12 1.0030      1      0     12     24     60    240    400    984   2172   3440
 22  12   5  4   60 1.6048      1      0      0      0     60    288    520    960   1980   3680
 23  12   6  1   12 0.1820      1     12     60    160    252    312    556   1104   1740   2796
 24  12   6  1    6 0.3845      1      6     20     58    132    236    460    936   1564   2478
 25  12   6  2    8 0.9797      1      0      8     20     36    144    264    544   1244   2016
 26  12   6  3   16 1.3580      1      0      0     16     36     96    256    624   1308   2112
 27  12   6  3   12 1.3974      1      0      0     12     40    100    244    668   1284   2076
 28  12   6  3   12 1.5044      1      0      0      4     36    132    256    660   1308   1980
 29  12   7  1   12 0.1452      1     12     60    160    252    312    544    972   1164   1596
 30  12   7  1    4 0.4645      1      4     12     32     60    168    416    580    876   1684
 31  12   7  1    4 0.5806      1      4      4     16     84    152    208    580   1268   1908
 32  12   7  2   12 0.7584      1      0     12     16     36    144    112    384    852   1056
 33  12   7  2    8 0.8795      1      0      8     16     28    112    160    384    772   1152
 34  12   7  3    4 1.4023      1      0      0      4     36     84     64    384    972   1368
 35  12  11  1    8 0.1765      1      8     24     36     60    180    356    424    612   1204
 36  12  11  1    4 0.2173      1      4     16     48     88    152    204    144    316    772
 37  12  11  3   12 1.0726      1      0      0     12      0     12    108     72    108    436
 38  12  14  1    8 0.1331      1      8     24     36     56    148    264    320    544    912
 39  12  14  1    4 0.1534      1      4     16     48     88    152    204    144    280    628
 40  12  14  3   12 0.9134      1      0      0     12      0      0     72     48     72    256
 41  12  15  1    8 0.1313      1      8     24     32     32    112    292    352    328    744
 42  12  15  1    4 0.3899      1      4      4      0     12     56     96     80    132    388
 43  12  15  1    2 0.4661      1      2      0     10     32     30     44     96    128    186
 44  12  15  2    6 0.5455      1      0      6      8      4     42     46     74    136    154
 45  12  15  2    6 0.9217      1      0      2      2      4     24     20     46    100    154
 46  12  15  3    4 1.0031      1      0      0      4      8     18     28     36     64    104
 47  12  15  4    4 1.3573      1      0      0      0      4     10     12     48     72    108
 48  12  15  5    4 1.5265      1      0      0      0      0      4     12     44    108    112
 49  12  23  1    8 0.0698      1      8     24     36     56    144    228    192    316    652
 50  12  23  1    4 0.0735      1      4     16     48     88    152    204    144    280    628
 51  12  23  3   12 0.5690      1      0      0     12      0      0     60      0      0    172
 52  16   3  2   16 1.4585      1      0     16    128    304   1408   6864  19584  47600 112768
 53  16   3  2   12 1.6669      1      0     12     48    440   1808   6332  18864  47648 113968
 54  16   3  2    8 1.7612      1      0      8     48    416   1808   6440  18864  48016 113968
 55  16   3  2    4 1.8303      1      0      4     64    360   1728   6676  19008  48448 113728
 56  16   5  2    2 1.7671      1      0      2      4     72    216    884   2452   6432  14520
 57  16   5  4  240 1.6822      1      0      0      0    240      0    480      0  15600      0
 58  16   5  4  112 1.9213      1      0      0      0    112      0   1248   2048   5872  16384
 59  16   5  4   64 1.9855      1      0      0      0     64    192    864   2432   6448  14656
 60  16   5  4   48 2.0079      1      0      0      0     48    256    736   2560   6640  14080
 61  16   6  2   16 0.8582      1      0     16     16    112    256    560   1792   2928   7616
 62  16   6  3   18 1.5662      1      0      0     18     44    122    392   1050   2896   7126
 63  16   6  3    8 1.7693      1      0      0      8     32    124    376   1112   3000   7156
 64  16   6  3    8 1.8272      1      0      0      8     16    120    448   1128   2992   7176
 65  16   7  3   32 1.2206      1      0      0     32     32     32    416    768   1216   3648
 66  16   7  3    6 1.7604      1      0      0      6     12     74    252    560   1536   3968
 67  16   7  3    2 1.8381      1      0      0      2     16     86    212    496   1556   4072
 68  16  11  3   16 1.0985      1      0      0     16      0     16    176     96    192   1072
 69  16  11  3   16 1.1138      1      0      0     16      0     12    164    100    240   1092
 70  16  14  3   16 0.8864      1      0      0     16      0      0    128     64     96    640
 71  16  14  3   16 0.8933      1      0      0     16      0      0    124     52    100    676
 72  16  15  4    6 1.5187      1      0      0      0      6     10     22     54     78    182
 73  16  15  4    4 1.6192      1      0      0      0      4      4     34     40     74    182
 74  16  15  4    4 1.7660      1      0      0      0      4      0     14     24    134    156
 75  16  15  4    2 1.8018      1      0      0      0      2      4     10     38     84    208
 76  16  15  5    4 1.9146      1      0      0      0      0      4      8     26    100    178
 77  16  15  5    4 1.9344      1      0      0      0      0      4      4     36     74    170
 78  16  15  5    2 1.8890      1      0      0      0      0      2     16     42     70    160
 79  16  23  3   16 0.4715      1      0      0     16      0      0    112      0      0    464
 80  16  23  3   16 0.4720      1      0      0     16      0      0    112      0      0    460
"""


@dataclass(frozen=True)
class ReferenceRow:
    number: int
    dim: int
    d: int
    mu: int
    kissing: int
    chi: float
    theta: tuple[int, ...]


def _parse() -> tuple[ReferenceRow, ...]:
    rows = []
    for line in _ROWS.strip().splitlines():
        no, dim, d, mu, ks, chi, *theta = line.split()
        rows.append(ReferenceRow(int(no), int(dim), int(d), int(mu), int(ks), float(chi),
                                 tuple(int(t) for t in theta)))
    return tuple(rows)


REFERENCE_ROWS = _parse()

# rows whose lattice is produced by a built-in example code
ROW_EXAMPLES = {3: "q8_1", 4: "o6", 20: "o3", 22: "extremal12"}
