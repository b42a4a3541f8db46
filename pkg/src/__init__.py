# trispin - triality, spin lifting and spinor L-factor calculus
