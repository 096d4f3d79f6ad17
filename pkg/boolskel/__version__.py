__version__ = '0.3.0'
__author__ = 'BoolSkel contributors'
__email__ = 'boolskel-dev@users.noreply.github.com'
