name = 'engel_sinks'
__version__ = '0.1.0'
