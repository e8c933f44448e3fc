""" Exact representation rings of finite groups, their ghost rings, tensor induction along right-free bisets
and orthogonal unit groups. """

__version__ = '0.1.0'
