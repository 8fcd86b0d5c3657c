bound 6
level 1: 1.0 1.1
deg 1 2: 1.*2 1.*2
deg 1 3: 1.*3 1.*3
deg 1 4: 1.*4 1.*4
deg 1 5: 1.*5 1.*5
deg 1 6: 1.*6 1.*6
level 2: 0.*2 1.*2
deg 2 4: 0.*4 1.*4
deg 2 6: 0.*6 1.*6
level 3: 1.*3
deg 3 6: 1.*6
level 4: 0.*4 1.*4
level 5: 1.*5
level 6: 0.*6 1.*6
