"""
See PEP 440 (https://www.python.org/dev/peps/pep-0440/)

Release logic:
 1. Increase version number (change __version__ below).
 2. git add salmonrun/__init__.py
 3. git commit -m 'Bump to {new version}'
 4. git push
 5. Assure that all tests pass (tox).
 6. git tag {new version}
 7. git push --tags
 8. python setup.py sdist
 9. twine upload dist/django-salmonrun-{new version}.tar.gz
"""

__version__ = '0.1.0'
